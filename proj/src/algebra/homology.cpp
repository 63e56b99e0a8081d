#include "lagblow/algebra/homology.hpp"

#include "lagblow/algebra/smith.hpp"
#include "lagblow/error.hpp"

namespace lagblow::algebra {

HomologyFragment homology_decompose(const ScalarMatrix& d_in, const ScalarMatrix& d_out) {
  if (d_in.rows() != d_out.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "d_in has " + std::to_string(d_in.rows()) + " rows but d_out has " +
                    std::to_string(d_out.cols()) + " columns");
  }
  if (d_in.cols() > 0 && d_out.rows() > 0 && !(d_out * d_in).is_zero()) {
    throw Error(ErrorKind::NotAComplex, "d_out * d_in is nonzero");
  }

  HomologyFragment out;
  out.ambient_rank = d_in.rows();

  // Rational exponents: run the PID algorithm in T^{1/scale} and map the
  // invariant factors back.
  const std::int64_t scale = d_in.exponent_denominator_lcm();
  const SNFResult snf = smith_normal_form(scale == 1 ? d_in : d_in.rescaled_exponents(Rational{scale}));
  out.rank_in = snf.rank();
  for (const auto& f : snf.divisors) {
    if (!f.is_unit()) out.torsion.push_back(scale == 1 ? f : f.rescaled(Rational(1, scale)));
  }
  out.rank_out = rank_over_fraction_field(d_out);
  // rank-nullity: ker(d_out) holds a full-rank copy of im(d_in)
  if (out.rank_out + out.rank_in > out.ambient_rank) {
    throw Error(ErrorKind::NotAComplex, "rank(d_out) + rank(d_in) exceeds the ambient rank");
  }
  out.free_rank = out.ambient_rank - out.rank_out - out.rank_in;
  return out;
}

}  // namespace lagblow::algebra
