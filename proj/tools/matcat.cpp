// matcat: command-line front end for building and checking reconstructed tensor categories.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>

#include "matcat/category.hpp"
#include "matcat/equivalence.hpp"
#include "matcat/h4.hpp"
#include "matcat/io.hpp"
#include "matcat/validate.hpp"

using namespace matcat;

namespace {

struct Global {
  bool trust = false;
  unsigned jobs = 1;
};

struct Failed {
  int code;
};

std::string render(const BlockMatrix& x) {
  const auto& a = x.alg();
  std::vector<std::vector<std::string>> cells(x.rows(), std::vector<std::string>(x.cols()));
  std::size_t w = 1;
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) {
      cells[r][c] = alg_str(a, x.at(r, c));
      w = std::max(w, cells[r][c].size());
    }
  std::string out = fmt::format("type ({} | {})\n", obj_str(x.row_type()), obj_str(x.col_type()));
  for (const auto& row : cells) {
    out += "  [";
    for (std::size_t c = 0; c < row.size(); ++c) out += fmt::format("{}{:>{}}", c ? " " : " ", row[c], w);
    out += " ]\n";
  }
  return out;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

void print_report(const Report& r) {
  std::cout << r.json_lines();
  std::cout << r.summary();
}

Quadruple load_checked(const std::string& path, const Global& g) {
  Quadruple q = load_quadruple(path);
  if (!g.trust) {
    Report r = validate(q, g.jobs);
    if (!r.ok()) {
      print_report(r);
      throw Failed{1};
    }
  }
  return q;
}

BlockMatrix load_matrix(const Quadruple& q, const std::string& path) {
  try {
    return matrix_from_json(q.alg, read_json_file(path));
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

int report_exit(const Report& r) {
  print_report(r);
  return r.ok() ? 0 : 1;
}

int cmd_example(const std::string& name, const std::string& emit_path, const Global& g) {
  if (name != "h4") throw ParseError("unknown example '" + name + "' (available: h4)");
  auto mod = h4_model();
  Quadruple q = quadruple_from_model(mod);
  if (!emit_path.empty()) {
    std::ofstream out(emit_path);
    if (!out) throw ParseError("cannot write " + emit_path);
    out << quadruple_to_json(q).dump(1) << "\n";
  }
  Report r = validate(q, g.jobs);
  std::vector<ObjVec> small = objects_up_to(q.rank(), 2);
  std::vector<ObjVec> units;
  for (int i = 0; i < q.rank(); ++i) units.push_back(unit_vec(q.rank(), i));
  r.merge(check_model_diagrams(mod, q, units));
  r.merge(check_hom_faithful(mod, q, objects_up_to(q.rank(), 3)));
  r.merge(check_green_ring(*q.ring, small));
  print_report(r);

  // comparison with the printed phi values; informational, not part of the exit code
  std::cout << "printed phi values:\n";
  for (const auto& s : h4_printed_phi(q)) {
    const auto& a = *q.alg;
    const auto& got = q.phi_at(*a.index_of(s.x), *a.index_of(s.y));
    bool same = got == s.printed;
    emit(json{{"phi", s.x + "⊗" + s.y}, {"matches_printed", same}, {"computed", matrix_to_json(got)}});
    std::cout << fmt::format("  phi({}⊗{}) {}\n", s.x, s.y, same ? "matches" : "DIFFERS from printed value");
    if (!same) std::cout << "  computed " << render(got) << "  printed  " << render(s.printed);
  }
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconstructed tensor categories from (R, A, phi, a) data"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_flag("--trust", g.trust, "skip the implicit validation of input specs");
  app.add_option("--jobs", g.jobs, "worker threads for check sweeps")->check(CLI::Range(1u, 256u));

  std::string spec, spec2, file, file2, a1, a2, a3, expr, emit_path, name;
  int rc = 0;

  auto* validate_cmd = app.add_subcommand("validate", "run fusion, algebra, phi and associator checks");
  validate_cmd->add_option("spec", spec)->required();
  validate_cmd->callback([&] { rc = report_exit(validate(load_quadruple(spec), g.jobs)); });

  auto* tobj = app.add_subcommand("tensor-obj", "m ⊗̂ s of two objects");
  tobj->add_option("spec", spec)->required();
  tobj->add_option("m", a1)->required();
  tobj->add_option("s", a2)->required();
  tobj->callback([&] {
    Quadruple q = load_checked(spec, g);
    ObjVec t = q.tensor(parse_obj(a1, q.rank()), parse_obj(a2, q.rank()));
    emit(json{{"object", obj_str(t)}});
    std::cout << obj_str(t) << "\n";
  });

  auto* tmor = app.add_subcommand("tensor-mor", "X ⊗̂ Y of two matrices");
  tmor->add_option("spec", spec)->required();
  tmor->add_option("x", file)->required();
  tmor->add_option("y", file2)->required();
  tmor->callback([&] {
    Quadruple q = load_checked(spec, g);
    BlockMatrix z = hat_tensor(q, load_matrix(q, file), load_matrix(q, file2));
    emit(json{{"matrix", matrix_to_json(z)}});
    std::cout << render(z);
  });

  auto* assoc = app.add_subcommand("assoc", "the associator a_{m,s,t}");
  assoc->add_option("spec", spec)->required();
  assoc->add_option("m", a1)->required();
  assoc->add_option("s", a2)->required();
  assoc->add_option("t", a3)->required();
  assoc->callback([&] {
    Quadruple q = load_checked(spec, g);
    int n = q.rank();
    BlockMatrix z = extend(q, parse_obj(a1, n), parse_obj(a2, n), parse_obj(a3, n));
    emit(json{{"matrix", matrix_to_json(z)}});
    std::cout << render(z);
  });

  auto* ker = app.add_subcommand("kernel", "kernel (t, K) of a morphism");
  auto* coker = app.add_subcommand("cokernel", "cokernel (t, C) of a morphism");
  for (auto* c : {ker, coker}) {
    c->add_option("spec", spec)->required();
    c->add_option("x", file)->required();
  }
  ker->callback([&] {
    Quadruple q = load_checked(spec, g);
    SubQuot k = kernel(load_matrix(q, file));
    emit(json{{"object", obj_str(k.obj)}, {"matrix", matrix_to_json(k.map)}});
    std::cout << "kernel object " << obj_str(k.obj) << "\n" << render(k.map);
  });
  coker->callback([&] {
    Quadruple q = load_checked(spec, g);
    SubQuot k = cokernel(load_matrix(q, file));
    emit(json{{"object", obj_str(k.obj)}, {"matrix", matrix_to_json(k.map)}});
    std::cout << "cokernel object " << obj_str(k.obj) << "\n" << render(k.map);
  });

  auto* factor = app.add_subcommand("factor", "epi-mono factorization X = X1 X2");
  factor->add_option("spec", spec)->required();
  factor->add_option("x", file)->required();
  factor->callback([&] {
    Quadruple q = load_checked(spec, g);
    auto [x1, x2] = epi_mono_factor(load_matrix(q, file));
    emit(json{{"x1", matrix_to_json(x1)}, {"x2", matrix_to_json(x2)}});
    std::cout << "x1 " << render(x1) << "x2 " << render(x2);
  });

  auto* green = app.add_subcommand("green-ring", "evaluate an expression in r1..rn");
  green->add_option("spec", spec)->required();
  green->add_option("expr", expr)->required();
  green->callback([&] {
    Quadruple q = load_checked(spec, g);
    RingElement v;
    try {
      v = eval_ring_expr(*q.ring, expr);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    emit(json{{"value", v}, {"text", ring_str(v)}});
    std::cout << ring_str(v) << "\n";
  });

  auto* eta = app.add_subcommand("eta-equiv", "check an eta witness between two associator families");
  eta->add_option("spec", spec)->required();
  eta->add_option("spec2", spec2)->required();
  eta->add_option("witness", file)->required();
  eta->callback([&] {
    Quadruple q = load_checked(spec, g), q2 = load_checked(spec2, g);
    rc = report_exit(check_eta_equiv(q, q2, eta_from_json(q, read_json_file(file)), g.jobs));
  });

  auto* equiv = app.add_subcommand("equiv", "check a tensor-equivalence witness");
  equiv->add_option("spec", spec)->required();
  equiv->add_option("spec2", spec2)->required();
  equiv->add_option("witness", file)->required();
  equiv->callback([&] {
    Quadruple qa = load_checked(spec, g), qb = load_checked(spec2, g);
    rc = report_exit(check_tensor_equiv(qa, qb, equiv_from_json(qa, qb, read_json_file(file)), g.jobs));
  });

  auto* example = app.add_subcommand("example", "build a built-in example and self-check it");
  example->add_option("name", name)->required();
  example->add_option("--emit", emit_path, "write the generated spec to this path");
  example->callback([&] { rc = cmd_example(name, emit_path, g); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const TypeError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const Failed& f) {
    return f.code;
  } catch (const std::exception& e) {
    emit(json{{"error", e.what()}});
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
