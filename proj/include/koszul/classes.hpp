#pragma once

#include <string>
#include <vector>

#include "koszul/cohomology.hpp"
#include "koszul/exterior.hpp"
#include "koszul/koszul.hpp"
#include "koszul/lie_algebra.hpp"

namespace koszul {

/// Alternated product trace tr(S_1 ... S_{4k-3}) on the symmetric model of gl(n)/so(n).
/// The result is checked to be invariant and closed. Errors: DegreeOutOfRange.
Form trace_form(std::size_t n, std::size_t k);

/// Recursive expansion along the first row. Errors: OddSize, NotSkewSymmetric.
Scalar pfaffian(const Matrix& a);

struct PfaffianClass {
  SubalgebraPair pair;
  CohomologyClass cls;
  Form representative;       // on gl(2m)/so(2m)
  bool unique = false;        // complement of the odd part in degree 2m is a line
  bool completes_ring = false;
};

/// The even generator in degree 2m of H(gl(2m), so(2m)). Errors: NoEvenGenerator.
PfaffianClass pfaffian_class(std::size_t m);

struct Generator {
  std::size_t degree = 0;
  std::string label;
  CohomologyClass cls;
  Form form;  // representative on g/h
};

struct GeneratorReport {
  SubalgebraPair pair;
  std::vector<std::size_t> betti;
  std::vector<Generator> generators;
  /// Products over subsets of generators form a basis of every degree.
  bool exterior_presentation = false;
};

GeneratorReport identify_generators(const SubalgebraPair& pair);
GeneratorReport identify_generators(const PairContext& context);

/// y_{(d+1)/2} for d = 1 mod 4, y_d for even d, otherwise x_d.
std::string generator_label(std::size_t degree);

}  // namespace koszul
