#pragma once

// Sparse multivariate Laurent polynomials with exact integer coefficients
// over two named variable blocks x_1..x_nx and z_1..z_nz.  Characters of
// Levi representations live here.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "grex/bigint.hpp"

namespace grex {

class LaurentPoly {
public:
    LaurentPoly(int nx, int nz) : nx_(nx), nz_(nz) {}

    int nx() const { return nx_; }
    int nz() const { return nz_; }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }

    static LaurentPoly zero(int nx, int nz) { return LaurentPoly(nx, nz); }

    static LaurentPoly constant(int nx, int nz, Int c) {
        LaurentPoly p(nx, nz);
        p.add_term(std::vector<int>(nx + nz, 0), std::move(c));
        return p;
    }

    static LaurentPoly monomial(int nx, int nz, std::vector<int> exps, Int c = 1) {
        LaurentPoly p(nx, nz);
        p.add_term(std::move(exps), std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    void add_term(std::vector<int> exps, Int c) {
        if (static_cast<int>(exps.size()) != nx_ + nz_)
            throw std::invalid_argument("LaurentPoly: exponent vector has wrong arity");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(std::move(exps), std::move(c));
        if (!inserted) {
            it->second += c;  // c was moved only on insert
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_blocks(o);
        for (const auto& [e, c] : o.terms_) {
            auto it = terms_.find(e);
            if (it == terms_.end()) {
                terms_.emplace(e, c);
            } else {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) {
        check_blocks(o);
        for (const auto& [e, c] : o.terms_) {
            auto it = terms_.find(e);
            if (it == terms_.end()) {
                terms_.emplace(e, -c);
            } else {
                it->second -= c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_blocks(b);
        LaurentPoly out(a.nx_, a.nz_);
        std::vector<int> e(a.nx_ + a.nz_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly& operator*=(const Int& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Evaluation at x_i = z_j = 1 (the rank of the representation).
    Int eval_ones() const {
        Int s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    /// Substitute x_i -> q^{qx[i]}, z_j -> q^{qz[j]}; returns a univariate
    /// Laurent polynomial in q as an exponent -> coefficient map.
    std::map<long long, Int> substitute_q(const std::vector<int>& qx,
                                          const std::vector<int>& qz) const {
        if (static_cast<int>(qx.size()) != nx_ || static_cast<int>(qz.size()) != nz_)
            throw std::invalid_argument("substitute_q: wrong block sizes");
        std::map<long long, Int> out;
        for (const auto& [e, c] : terms_) {
            long long deg = 0;
            for (int i = 0; i < nx_; ++i) deg += static_cast<long long>(e[i]) * qx[i];
            for (int j = 0; j < nz_; ++j) deg += static_cast<long long>(e[nx_ + j]) * qz[j];
            auto [it, inserted] = out.emplace(deg, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) out.erase(it);
            }
        }
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += c.str();
            for (int i = 0; i < nx_; ++i)
                if (e[i]) out += " x" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
            for (int j = 0; j < nz_; ++j)
                if (e[nx_ + j])
                    out += " z" + std::to_string(j + 1) + "^" + std::to_string(e[nx_ + j]);
        }
        return out;
    }

private:
    void check_blocks(const LaurentPoly& o) const {
        if (nx_ != o.nx_ || nz_ != o.nz_)
            throw std::invalid_argument("LaurentPoly: mismatched variable blocks");
    }

    int nx_, nz_;
    std::map<std::vector<int>, Int> terms_;  // no zero coefficients stored
};

}  // namespace grex
