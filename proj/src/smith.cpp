#include <algorithm>
#include <optional>
#include <utility>
#include <utility>

#include "lscat/error.hpp"
#include "lscat/exact_algebra.hpp"

namespace lscat {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(Index n) {
    IntMatrix m(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (Index r = 0; r < rows_; ++r) {
        for (Index c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const mpz_class& v) { return sgn(v) == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (Index i = 0; i < a.rows_; ++i) {
        for (Index k = 0; k < a.cols_; ++k) {
            const mpz_class& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (Index j = 0; j < b.cols_; ++j) {
                if (sgn(b(k, j)) != 0) out(i, j) += x * b(k, j);
            }
        }
    }
    return out;
}

mpz_class determinant(const IntMatrix& input) {
    if (input.rows() != input.cols()) throw Error(ErrorCode::InvalidArgument, "non-square matrix");
    const Index n = input.rows();
    if (n == 0) return 1;
    IntMatrix a = input;
    int sign = 1;
    mpz_class prev = 1;
    for (Index k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            Index swap = k + 1;
            while (swap < n && sgn(a(swap, k)) == 0) ++swap;
            if (swap == n) return 0;
            for (Index c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j));
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

// In-place diagonalization with optional tracking of the unimodular
// transforms and their inverses: S = U * A * V.
class SmithWork {
public:
    SmithWork(const IntMatrix& a, bool track) : s_(a), track_(track) {
        if (track_) {
            u_ = IntMatrix::identity(a.rows());
            ui_ = u_;
            v_ = IntMatrix::identity(a.cols());
            vi_ = v_;
        }
    }

    // Diagonalize; with `chain`, also enforce the divisibility chain.
    void run(bool chain) {
        const Index limit = std::min(s_.rows(), s_.cols());
        for (Index t = 0; t < limit; ++t) {
            auto pivot = find_min(t);
            if (!pivot) break;
            move_to(t, pivot->first, pivot->second);
            for (;;) {
                if (!clear_cross(t)) continue;
                if (chain) {
                    auto bad = find_nondivisible(t);
                    if (bad) {
                        add_row(t, *bad, 1);
                        continue;
                    }
                }
                break;
            }
            if (sgn(s_(t, t)) < 0) negate_row(t);
        }
    }

    IntMatrix& s() { return s_; }
    IntMatrix& u() { return u_; }
    IntMatrix& ui() { return ui_; }
    IntMatrix& v() { return v_; }
    IntMatrix& vi() { return vi_; }

private:
    std::optional<std::pair<Index, Index>> find_min(Index t) const {
        std::optional<std::pair<Index, Index>> best;
        mpz_class best_abs;
        for (Index i = t; i < s_.rows(); ++i) {
            for (Index j = t; j < s_.cols(); ++j) {
                const mpz_class& x = s_(i, j);
                if (sgn(x) == 0) continue;
                if (!best || mpz_cmpabs(x.get_mpz_t(), best_abs.get_mpz_t()) < 0) {
                    best = {i, j};
                    best_abs = abs(x);
                    if (best_abs == 1) return best;
                }
            }
        }
        return best;
    }

    void move_to(Index t, Index i, Index j) {
        if (i != t) swap_rows(t, i);
        if (j != t) swap_cols(t, j);
    }

    // Clear column t below and row t right of the pivot. Returns false if a
    // nonzero remainder forced a new (smaller) pivot into place.
    bool clear_cross(Index t) {
        mpz_class q;
        for (Index i = t + 1; i < s_.rows(); ++i) {
            if (sgn(s_(i, t)) == 0) continue;
            mpz_tdiv_q(q.get_mpz_t(), s_(i, t).get_mpz_t(), s_(t, t).get_mpz_t());
            if (sgn(q) != 0) add_row(i, t, -q);
            if (sgn(s_(i, t)) != 0) {
                swap_rows(t, i);
                return false;
            }
        }
        for (Index j = t + 1; j < s_.cols(); ++j) {
            if (sgn(s_(t, j)) == 0) continue;
            mpz_tdiv_q(q.get_mpz_t(), s_(t, j).get_mpz_t(), s_(t, t).get_mpz_t());
            if (sgn(q) != 0) add_col(j, t, -q);
            if (sgn(s_(t, j)) != 0) {
                swap_cols(t, j);
                return false;
            }
        }
        return true;
    }

    std::optional<Index> find_nondivisible(Index t) const {
        for (Index i = t + 1; i < s_.rows(); ++i) {
            for (Index j = t + 1; j < s_.cols(); ++j) {
                if (sgn(s_(i, j)) != 0 && !mpz_divisible_p(s_(i, j).get_mpz_t(), s_(t, t).get_mpz_t())) {
                    return i;
                }
            }
        }
        return std::nullopt;
    }

    void swap_rows(Index a, Index b) {
        for (Index c = 0; c < s_.cols(); ++c) std::swap(s_(a, c), s_(b, c));
        if (!track_) return;
        for (Index c = 0; c < u_.cols(); ++c) std::swap(u_(a, c), u_(b, c));
        for (Index r = 0; r < ui_.rows(); ++r) std::swap(ui_(r, a), ui_(r, b));
    }

    void swap_cols(Index a, Index b) {
        for (Index r = 0; r < s_.rows(); ++r) std::swap(s_(r, a), s_(r, b));
        if (!track_) return;
        for (Index r = 0; r < v_.rows(); ++r) std::swap(v_(r, a), v_(r, b));
        for (Index c = 0; c < vi_.cols(); ++c) std::swap(vi_(a, c), vi_(b, c));
    }

    // row dst += q * row src
    void add_row(Index dst, Index src, const mpz_class& q) {
        for (Index c = 0; c < s_.cols(); ++c) {
            if (sgn(s_(src, c)) != 0) s_(dst, c) += q * s_(src, c);
        }
        if (!track_) return;
        for (Index c = 0; c < u_.cols(); ++c) {
            if (sgn(u_(src, c)) != 0) u_(dst, c) += q * u_(src, c);
        }
        for (Index r = 0; r < ui_.rows(); ++r) {
            if (sgn(ui_(r, dst)) != 0) ui_(r, src) -= q * ui_(r, dst);
        }
    }

    // col dst += q * col src
    void add_col(Index dst, Index src, const mpz_class& q) {
        for (Index r = 0; r < s_.rows(); ++r) {
            if (sgn(s_(r, src)) != 0) s_(r, dst) += q * s_(r, src);
        }
        if (!track_) return;
        for (Index r = 0; r < v_.rows(); ++r) {
            if (sgn(v_(r, src)) != 0) v_(r, dst) += q * v_(r, src);
        }
        for (Index c = 0; c < vi_.cols(); ++c) {
            if (sgn(vi_(dst, c)) != 0) vi_(src, c) -= q * vi_(dst, c);
        }
    }

    void negate_row(Index r) {
        for (Index c = 0; c < s_.cols(); ++c) s_(r, c) = -s_(r, c);
        if (!track_) return;
        for (Index c = 0; c < u_.cols(); ++c) u_(r, c) = -u_(r, c);
        for (Index i = 0; i < ui_.rows(); ++i) ui_(i, r) = -ui_(i, r);
    }

    IntMatrix s_;
    bool track_;
    IntMatrix u_, ui_, v_, vi_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    SmithWork work(a, true);
    work.run(true);
    return SmithForm{std::move(work.s()), std::move(work.u()), std::move(work.v()),
                     std::move(work.ui()), std::move(work.vi())};
}

std::vector<mpz_class> invariant_factors(const IntMatrix& a) {
    SmithWork work(a, false);
    work.run(false);
    std::vector<mpz_class> d;
    const Index limit = std::min(a.rows(), a.cols());
    for (Index i = 0; i < limit; ++i) {
        if (sgn(work.s()(i, i)) != 0) d.push_back(abs(work.s()(i, i)));
    }
    // Pairwise gcd/lcm turns any diagonal into the invariant-factor chain.
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            mpz_class g = gcd(d[i], d[j]);
            mpz_class l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    return d;
}

bool is_smith_form(const IntMatrix& d) {
    mpz_class prev = 1;
    bool seen_zero = false;
    for (Index r = 0; r < d.rows(); ++r) {
        for (Index c = 0; c < d.cols(); ++c) {
            if (r != c && sgn(d(r, c)) != 0) return false;
        }
    }
    const Index limit = std::min(d.rows(), d.cols());
    for (Index i = 0; i < limit; ++i) {
        const mpz_class& x = d(i, i);
        if (sgn(x) < 0) return false;
        if (sgn(x) == 0) {
            seen_zero = true;
            continue;
        }
        if (seen_zero) return false;
        if (!mpz_divisible_p(x.get_mpz_t(), prev.get_mpz_t())) return false;
        prev = x;
    }
    return true;
}

}  // namespace lscat
