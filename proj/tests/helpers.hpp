#pragma once

#include "aknsmf/poly.hpp"

#include <random>

namespace aknsmf::testing {

inline GaussianRational G(long re_num, long re_den, long im_num, long im_den) {
    return GaussianRational::make(re_num, re_den, im_num, im_den);
}

inline GaussianRational gi(long n = 1) { return GaussianRational(0, n); }

inline Poly E(int j) { return Poly::e(j); }
inline Poly F(int j) { return Poly::f(j); }
/// Jet of e_j / f_j in a single time.
inline Poly dE(int time, int j) { return Poly::var(Variable::e(j, {{time, 1}})); }
inline Poly dF(int time, int j) { return Poly::var(Variable::f(j, {{time, 1}})); }
inline Poly Qv(JetIndex jet = {}) { return Poly::var(Variable::q(std::move(jet))); }
inline Poly Rv(JetIndex jet = {}) { return Poly::var(Variable::r(std::move(jet))); }

class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    GaussianRational scalar() {
        std::uniform_int_distribution<long> num(-6, 6);
        std::uniform_int_distribution<long> den(1, 4);
        return G(num(gen_), den(gen_), num(gen_), den(gen_));
    }

    Variable variable(int max_index, int max_time = 0, int max_jet = 0) {
        std::uniform_int_distribution<int> kind(0, 1);
        std::uniform_int_distribution<int> idx(1, max_index);
        Variable v = kind(gen_) == 0 ? Variable::e(idx(gen_)) : Variable::f(idx(gen_));
        if (max_jet > 0) {
            std::uniform_int_distribution<int> jn(0, max_jet);
            std::uniform_int_distribution<int> jt(0, max_time);
            int n = jn(gen_);
            for (int m = 0; m < n; ++m) v = v.raised(jt(gen_));
        }
        return v;
    }

    Poly poly(int terms, int max_index, int max_vars_per_term = 3, int max_time = 0,
              int max_jet = 0) {
        Poly p;
        std::uniform_int_distribution<int> nvars(0, max_vars_per_term);
        std::uniform_int_distribution<int> exp(1, 2);
        for (int t = 0; t < terms; ++t) {
            Poly term(scalar());
            int n = nvars(gen_);
            for (int v = 0; v < n; ++v) {
                Poly var = Poly::var(variable(max_index, max_time, max_jet));
                for (int e = exp(gen_); e > 0; --e) term = term * var;
            }
            p += term;
        }
        return p;
    }

    std::mt19937_64& gen() { return gen_; }

private:
    std::mt19937_64 gen_;
};

}  // namespace aknsmf::testing
