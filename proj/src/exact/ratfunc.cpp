#include "ddelab/exact/ratfunc.hpp"

#include <array>

#include "ddelab/exact/errors.hpp"

namespace ddelab {

RatFunc::RatFunc(FieldElem f) : f_(std::move(f)) {}

int RatFunc::num_degree() const { return f_.num().degree(Var::z); }

int RatFunc::den_degree() const {
    int d = 0;
    for (const auto& fac : f_.den_factors()) d += fac.exp * std::max(fac.poly.degree(Var::z), 0);
    return d;
}

RatFunc RatFunc::shift(const GaussianRational& c) const { return RatFunc(f_.shift(Var::z, c)); }

RatFunc RatFunc::mirror() const { return RatFunc(f_.substitute(Var::z, -MPoly::var(Var::z))); }

FieldElem RatFunc::at_base(long j) const {
    return f_.substitute(Var::z, MPoly::var(Var::zhat) + MPoly(GaussianRational(j)));
}

std::complex<double> RatFunc::evaluate(std::complex<double> z) const {
    if (f_.support_mask() & ~(1u << index_of(Var::z)))
        throw DomainError("numeric evaluation of a rational function with free parameters");
    std::array<std::complex<double>, kNumVars> vals{};
    vals[index_of(Var::z)] = z;
    return f_.evaluate(vals);
}

RatFunc rf_shift(const RatFunc& r, const GaussianRational& c) {
    if (!c.is_gaussian_integer()) throw DomainError("shift must be a Gaussian integer");
    return r.shift(c);
}

} // namespace ddelab
