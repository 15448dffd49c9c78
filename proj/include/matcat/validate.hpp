#pragma once

#include "matcat/phi.hpp"

namespace matcat {

// fusion -> algebra -> phi -> associator; a stage that fails marks the later ones skipped.
Report validate(const Quadruple& q, unsigned jobs = 1);

}  // namespace matcat
