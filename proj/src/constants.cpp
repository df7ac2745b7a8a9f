#include "rdi/constants.hpp"

#include "rdi/errors.hpp"

namespace rdi {

PhysicalConstants PhysicalConstants::si() {
  return {parse_real("1.054571817e-34"), parse_real("299792458"), parse_real("1.602176634e-19"),
          parse_real("9.1093837015e-31"), parse_real("8.8541878128e-12")};
}

PhysicalConstants PhysicalConstants::natural() { return {Real(1), Real(1), Real(1), Real(1), Real(1)}; }

void PhysicalConstants::validate() const {
  if (!(hbar > 0 && c > 0 && e > 0 && m > 0 && epsilon0 > 0))
    throw ParameterError("physical constants must be strictly positive");
}

}  // namespace rdi
