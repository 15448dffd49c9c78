#include "matcat/validate.hpp"

#include "matcat/associator.hpp"

namespace matcat {

Report validate(const Quadruple& q, unsigned jobs) {
  Report rep;
  const char* later[] = {"algebra", "phi", "associator"};
  auto stop = [&](int from) {
    for (int k = from; k < 3; ++k) rep.skip(later[k], "skipped after an earlier stage failed");
    return rep;
  };
  if (q.ring->rank() != q.alg->rank()) {
    rep.fail("fusion.rank", {}, "fusion ring and algebra have different ranks");
    return stop(0);
  }
  rep.merge(q.ring->check());
  if (!rep.ok()) return stop(0);
  rep.merge(q.alg->check());
  if (!rep.ok()) return stop(1);
  rep.merge(check_phi(q));
  if (!rep.ok()) return stop(2);
  rep.merge(check_associator(q, jobs));
  return rep;
}

}  // namespace matcat
