#pragma once

// Young diagrams in a k x (n-k) rectangle, their binary-word avatar, the
// cyclic Z/nZ action, triangularity, orbits and the path statistics
// o, r, l, d, e used by the Lefschetz machinery.
//
// Conventions, fixed once and for all:
//  * rows are nonincreasing integers, possibly negative (generalized form);
//    a diagram is "inscribed" when 0 <= rows[k-1] and rows[0] <= n-k.
//  * the binary word reads the lattice path from the LOWER-LEFT corner of
//    the rectangle to the upper-right one; 0 = horizontal step, 1 = vertical
//    step; the word has n bits with exactly k ones.
//  * the shift moves the last bit of the word to the front; in row form it
//    adds one box to every row when rows[0] < n-k, and otherwise drops the
//    full top row and appends a zero.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace grex {

class RectDiagram {
public:
    RectDiagram(int n, int k, std::vector<int> rows) : n_(n), k_(k), rows_(std::move(rows)) {
        if (n_ < 2 || k_ < 1 || k_ > n_ - 1)
            throw std::invalid_argument("RectDiagram: need n >= 2 and 1 <= k <= n-1");
        if (static_cast<int>(rows_.size()) != k_)
            throw std::invalid_argument("RectDiagram: expected exactly k rows");
        for (int i = 0; i + 1 < k_; ++i)
            if (rows_[i] < rows_[i + 1])
                throw std::invalid_argument("RectDiagram: rows must be nonincreasing");
    }

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<int>& rows() const { return rows_; }
    int row(int i) const { return rows_.at(i); }

    bool inscribed() const { return rows_.back() >= 0 && rows_.front() <= n_ - k_; }

    /// Number of boxes (may be negative for generalized diagrams).
    long long size() const {
        long long s = 0;
        for (int r : rows_) s += r;
        return s;
    }

    /// Textual form "3,2,1".
    std::string str() const {
        std::string out;
        for (int i = 0; i < k_; ++i) {
            if (i) out += ',';
            out += std::to_string(rows_[i]);
        }
        return out;
    }

    static RectDiagram parse(int n, int k, const std::string& text) {
        std::vector<int> rows;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
            rows.push_back(std::stoi(item));
        return RectDiagram(n, k, std::move(rows));
    }

    friend bool operator==(const RectDiagram&, const RectDiagram&) = default;
    // Total order including the (n,k) context, for use in containers.
    // Domain comparisons go through lex_cmp / incl_cmp, which check context.
    friend auto operator<=>(const RectDiagram& a, const RectDiagram& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        if (auto c = a.k_ <=> b.k_; c != 0) return c;
        return std::compare_three_way{}(a.rows_, b.rows_);
    }

private:
    int n_, k_;
    std::vector<int> rows_;
};

struct BinaryWord {
    int n = 0;
    int k = 0;
    std::vector<std::uint8_t> bits;  // n entries in {0,1}, exactly k ones

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
};

namespace detail {
inline void require_inscribed(const RectDiagram& d, const char* op) {
    if (!d.inscribed())
        throw std::invalid_argument(std::string(op) + ": diagram must be inscribed");
}
inline void require_same_context(const RectDiagram& a, const RectDiagram& b, const char* op) {
    if (a.n() != b.n() || a.k() != b.k())
        throw std::invalid_argument(std::string(op) + ": mismatched (n,k) context");
}
}  // namespace detail

// --------------------------------------------------------------------------
// Binary-word bijection
// --------------------------------------------------------------------------

/// Lattice-path word of an inscribed diagram.  The i-th one (i = 1..k,
/// counted from the start of the word) is preceded by rows[k-i] zeros.
inline BinaryWord to_binary(const RectDiagram& d) {
    detail::require_inscribed(d, "to_binary");
    const int n = d.n(), k = d.k();
    BinaryWord w{n, k, std::vector<std::uint8_t>(n, 0)};
    for (int i = 0; i < k; ++i)
        w.bits[d.row(k - 1 - i) + i] = 1;
    return w;
}

inline RectDiagram from_binary(const BinaryWord& w, int n, int k) {
    if (w.n != n || w.k != k || static_cast<int>(w.bits.size()) != n)
        throw std::invalid_argument("from_binary: context mismatch");
    int ones = 0;
    for (auto b : w.bits) ones += b;
    if (ones != k) throw std::invalid_argument("from_binary: word must contain exactly k ones");
    std::vector<int> rows(k, 0);
    int zeros = 0, i = 0;
    for (auto b : w.bits) {
        if (b)
            rows[k - 1 - i++] = zeros;
        else
            ++zeros;
    }
    return RectDiagram(n, k, std::move(rows));
}

// --------------------------------------------------------------------------
// Group actions: shift (Z/nZ) and twist (Z)
// --------------------------------------------------------------------------

/// One application of the cyclic generator (last word bit moved to the
/// front), in closed row form.
inline RectDiagram shift(const RectDiagram& d) {
    detail::require_inscribed(d, "shift");
    const int n = d.n(), k = d.k();
    std::vector<int> rows = d.rows();
    if (rows[0] < n - k) {
        for (int& r : rows) ++r;
    } else {
        rows.erase(rows.begin());
        rows.push_back(0);
    }
    return RectDiagram(n, k, std::move(rows));
}

inline RectDiagram shift_pow(const RectDiagram& d, long long t) {
    if (t < 0) throw std::invalid_argument("shift_pow: exponent must be >= 0");
    detail::require_inscribed(d, "shift_pow");
    RectDiagram cur = d;
    for (long long i = 0, m = t % d.n(); i < m; ++i) cur = shift(cur);
    return cur;
}

inline RectDiagram twist(const RectDiagram& d, int t) {
    std::vector<int> rows = d.rows();
    for (int& r : rows) r += t;
    return RectDiagram(d.n(), d.k(), std::move(rows));
}

/// -lambda = (-lambda_k, ..., -lambda_1); satisfies Sigma^l U = Sigma^{-l} U*.
inline RectDiagram negated(const RectDiagram& d) {
    std::vector<int> rows(d.rows().rbegin(), d.rows().rend());
    for (int& r : rows) r = -r;
    return RectDiagram(d.n(), d.k(), std::move(rows));
}

/// Complement within the rectangle; reverses the binary word.
inline RectDiagram complement(const RectDiagram& d) {
    detail::require_inscribed(d, "complement");
    return twist(negated(d), d.n() - d.k());
}

/// The unique twist with top row n-k.
inline RectDiagram tilde_normalized(const RectDiagram& d) {
    return twist(d, d.n() - d.k() - d.row(0));
}

/// Concatenation of binary words: Y_{n,k} x Y_{m,l} -> Y_{n+m,k+l}.
inline RectDiagram concat(const RectDiagram& a, const RectDiagram& b) {
    detail::require_inscribed(a, "concat");
    detail::require_inscribed(b, "concat");
    BinaryWord wa = to_binary(a), wb = to_binary(b);
    BinaryWord w{a.n() + b.n(), a.k() + b.k(), wa.bits};
    w.bits.insert(w.bits.end(), wb.bits.begin(), wb.bits.end());
    return from_binary(w, w.n, w.k);
}

// --------------------------------------------------------------------------
// Orders
// --------------------------------------------------------------------------

inline std::strong_ordering lex_cmp(const RectDiagram& a, const RectDiagram& b) {
    detail::require_same_context(a, b, "lex_cmp");
    return std::compare_three_way{}(a.rows(), b.rows());
}

/// Partial inclusion order: a <= b iff a_i <= b_i for all i.
inline std::partial_ordering incl_cmp(const RectDiagram& a, const RectDiagram& b) {
    detail::require_same_context(a, b, "incl_cmp");
    bool le = true, ge = true;
    for (int i = 0; i < a.k(); ++i) {
        le &= a.row(i) <= b.row(i);
        ge &= a.row(i) >= b.row(i);
    }
    if (le && ge) return std::partial_ordering::equivalent;
    if (le) return std::partial_ordering::less;
    if (ge) return std::partial_ordering::greater;
    return std::partial_ordering::unordered;
}

// --------------------------------------------------------------------------
// Triangularity
// --------------------------------------------------------------------------

/// Path stays above the corner-to-corner diagonal of slope k/(n-k):
/// rows[i] <= (n-k)(k-1-i)/k, compared exactly by cross-multiplication.
inline bool is_upper_triangular(const RectDiagram& d) {
    detail::require_inscribed(d, "is_upper_triangular");
    const int n = d.n(), k = d.k();
    for (int i = 0; i < k; ++i)
        if (static_cast<long long>(k) * d.row(i) > static_cast<long long>(n - k) * (k - 1 - i))
            return false;
    return true;
}

inline bool is_lower_triangular(const RectDiagram& d) {
    detail::require_inscribed(d, "is_lower_triangular");
    return is_upper_triangular(complement(d));
}

/// Slope k/(n-k) as a reduced fraction (numerator, denominator).
inline std::pair<int, int> slope(const RectDiagram& d) {
    int g = std::gcd(d.k(), d.n() - d.k());
    return {d.k() / g, (d.n() - d.k()) / g};
}

// --------------------------------------------------------------------------
// Orbits of the cyclic action
// --------------------------------------------------------------------------

struct Orbit {
    std::vector<RectDiagram> members;  // successive shifts, starting at the seed
    int length() const { return static_cast<int>(members.size()); }
};

inline Orbit orbit(const RectDiagram& d) {
    detail::require_inscribed(d, "orbit");
    Orbit o;
    o.members.push_back(d);
    for (RectDiagram cur = shift(d); !(cur == d); cur = shift(cur))
        o.members.push_back(cur);
    return o;
}

inline int orbit_len(const RectDiagram& d) { return orbit(d).length(); }

/// All of Y_{n,k} in ascending lexicographic order.
inline std::vector<RectDiagram> enumerate_diagrams(int n, int k) {
    std::vector<RectDiagram> out;
    std::vector<int> rows(k, 0);
    auto rec = [&](auto&& self, int i, int maxv) -> void {
        if (i == k) {
            out.emplace_back(n, k, rows);
            return;
        }
        // ascending lex: later diagrams differ in an earlier, larger row
        for (int v = 0; v <= maxv; ++v) {
            rows[i] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 0, n - k);
    std::sort(out.begin(), out.end(),
              [](const RectDiagram& a, const RectDiagram& b) { return a.rows() < b.rows(); });
    return out;
}

inline std::vector<RectDiagram> upper_triangular_set(int n, int k) {
    std::vector<RectDiagram> out;
    for (const auto& d : enumerate_diagrams(n, k))
        if (is_upper_triangular(d)) out.push_back(d);
    return out;
}

inline std::vector<RectDiagram> lower_triangular_set(int n, int k) {
    std::vector<RectDiagram> out;
    for (const auto& d : enumerate_diagrams(n, k))
        if (is_lower_triangular(d)) out.push_back(d);
    return out;
}

/// One lex-smallest upper-triangular diagram per orbit (the set Y^mu),
/// in ascending lex order.  Every orbit contains an upper-triangular
/// element, so this indexes the orbits.
inline std::vector<RectDiagram> minimal_upper_reps(int n, int k) {
    std::map<std::vector<int>, RectDiagram> best;  // orbit key -> minimal upper member
    for (const auto& d : upper_triangular_set(n, k)) {
        Orbit o = orbit(d);
        std::vector<int> key = std::min_element(o.members.begin(), o.members.end(),
                                                [](const RectDiagram& a, const RectDiagram& b) {
                                                    return a.rows() < b.rows();
                                                })
                                   ->rows();
        auto it = best.find(key);
        if (it == best.end())
            best.emplace(key, d);
        else if (d.rows() < it->second.rows())
            it->second = d;
    }
    std::vector<RectDiagram> out;
    for (auto& [key, d] : best) out.push_back(d);
    std::sort(out.begin(), out.end(),
              [](const RectDiagram& a, const RectDiagram& b) { return a.rows() < b.rows(); });
    return out;
}

/// Complements of Y^mu (the set Y^ml), in ascending lex order.
inline std::vector<RectDiagram> minimal_lower_reps(int n, int k) {
    std::vector<RectDiagram> out;
    for (const auto& d : minimal_upper_reps(n, k)) out.push_back(complement(d));
    std::sort(out.begin(), out.end(),
              [](const RectDiagram& a, const RectDiagram& b) { return a.rows() < b.rows(); });
    return out;
}

// --------------------------------------------------------------------------
// Path statistics
// --------------------------------------------------------------------------

/// Distance from the upper-right corner to the first vertex on the diagonal:
/// the least t in [1,n] with (#ones among the last t bits) * n = k * t.
/// Strictly upper triangular diagrams give r = n.
inline int stat_r(const RectDiagram& d) {
    if (!is_upper_triangular(d))
        throw std::invalid_argument("stat_r: diagram must be upper triangular");
    BinaryWord w = to_binary(d);
    int ones = 0;
    for (int t = 1; t <= d.n(); ++t) {
        ones += w.bits[d.n() - t];
        if (static_cast<long long>(ones) * d.n() == static_cast<long long>(d.k()) * t) return t;
    }
    throw std::logic_error("stat_r: no diagonal return found");
}

/// Mirror statistic from the lower-left corner; satisfies l = r after
/// complementing.
inline int stat_l(const RectDiagram& d) {
    if (!is_lower_triangular(d))
        throw std::invalid_argument("stat_l: diagram must be lower triangular");
    BinaryWord w = to_binary(d);
    int ones = 0;
    for (int t = 1; t <= d.n(); ++t) {
        ones += w.bits[t - 1];
        if (static_cast<long long>(ones) * d.n() == static_cast<long long>(d.k()) * t) return t;
    }
    throw std::logic_error("stat_l: no diagonal return found");
}

namespace detail {
/// Inverse of the shift (first word bit moved to the end).
inline RectDiagram inverse_shift(const RectDiagram& d) {
    const int n = d.n(), k = d.k();
    std::vector<int> rows = d.rows();
    if (rows[k - 1] >= 1) {
        for (int& r : rows) --r;
    } else {
        rows.pop_back();
        rows.insert(rows.begin(), n - k);
    }
    return RectDiagram(n, k, std::move(rows));
}
}  // namespace detail

/// Least t >= 0 with shift_pow(d,t) lower triangular; 0 on Y^l.
inline int stat_d(const RectDiagram& d) {
    detail::require_inscribed(d, "stat_d");
    RectDiagram cur = d;
    for (int t = 0; t < d.n(); ++t) {
        if (is_lower_triangular(cur)) return t;
        cur = shift(cur);
    }
    throw std::logic_error("stat_d: orbit has no lower triangular element");
}

/// Distance from the lower-left corner to the first l-admissible vertex
/// along the path: least t >= 1 whose t-fold INVERSE shift is lower
/// triangular.  Walking t steps northeast from the lower-left corner moves
/// the rectangle's upper-right corner to the vertex of shift_pow(d, n-t),
/// which is why the inverse action appears here.  Satisfies e > 0,
/// e = l on Y^l, and e(tilde(d)) = e(d) + (n-k-d_1).
inline int stat_e(const RectDiagram& d) {
    detail::require_inscribed(d, "stat_e");
    RectDiagram cur = d;
    for (int t = 1; t <= d.n(); ++t) {
        cur = detail::inverse_shift(cur);
        if (is_lower_triangular(cur)) return t;
    }
    throw std::logic_error("stat_e: orbit has no lower triangular element");
}

}  // namespace grex
