#include "properclass/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "properclass/errors.hpp"

namespace properclass {

std::vector<mpz_class> SmithResult::diagonal() const {
    std::vector<mpz_class> out;
    int n = std::min(d.rows(), d.cols());
    for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
}

namespace {

// Position of the entry with smallest nonzero absolute value in the
// trailing submatrix starting at (t, t); ties broken by position.
bool find_pivot(const IntMatrix& a, int t, int& pr, int& pc) {
    bool found = false;
    mpz_class best;
    for (int i = t; i < a.rows(); ++i)
        for (int j = t; j < a.cols(); ++j) {
            const mpz_class& v = a.at(i, j);
            if (v == 0) continue;
            mpz_class av = abs(v);
            if (!found || av < best) {
                found = true;
                best = av;
                pr = i;
                pc = j;
            }
        }
    return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    int n = std::min(a.rows(), a.cols());

    for (int t = 0; t < n; ++t) {
        int pr, pc;
        if (!find_pivot(a, t, pr, pc)) break;
        a.swap_rows(t, pr);
        u.swap_rows(t, pr);
        a.swap_cols(t, pc);
        v.swap_cols(t, pc);

        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < a.rows(); ++i) {
                if (a.at(i, t) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
                a.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (a.at(i, t) != 0) {
                    // remainder is smaller than the pivot: promote it
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < a.cols(); ++j) {
                if (a.at(t, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
                a.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (a.at(t, j) != 0) {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            // divisibility: the pivot must divide the trailing block
            bool divides = true;
            for (int i = t + 1; i < a.rows() && divides; ++i)
                for (int j = t + 1; j < a.cols(); ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        a.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    // verify the factorization on every call
    if (u * m * v != a) throw std::logic_error("smith_normal_form: U*M*V != D");
    mpz_class du = u.determinant();
    mpz_class dv = v.determinant();
    if (du != 1 && du != -1) throw std::logic_error("smith_normal_form: U not unimodular");
    if (dv != 1 && dv != -1) throw std::logic_error("smith_normal_form: V not unimodular");
    for (int i = 1; i < n; ++i) {
        if (a.at(i, i) != 0 && a.at(i - 1, i - 1) != 0 && a.at(i, i) % a.at(i - 1, i - 1) != 0)
            throw std::logic_error("smith_normal_form: diagonal not a divisibility chain");
        if (a.at(i, i) != 0 && a.at(i - 1, i - 1) == 0)
            throw std::logic_error("smith_normal_form: zero before nonzero on diagonal");
    }
    return SmithResult{std::move(a), std::move(u), std::move(v)};
}

// ---------------------------------------------------------------------------
// Sparse elimination
// ---------------------------------------------------------------------------

namespace {

struct Overflow64 {};

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow64{};
    return r;
}

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow64{};
    return r;
}

// Column-major exact elimination. Over Z only ±1 pivots are used, so the
// surviving block is an integer Schur complement and the eliminated part
// contributes invariant factor 1 each; the survivors are finished by the
// dense engine. Over F_p every nonzero entry is a pivot.
//
// Pivots are taken from an optional caller-supplied plan first (each
// validated to be ±1 at use time), then from repeated descending-row
// sweeps. Plans let nerve homology exploit the pairing induced by an
// initial or terminal object, which keeps fill near-linear.
template <class S>
class Eliminator {
  public:
    Eliminator(const SparseIntMatrix& m, long p) : p_(p) {
        nr_ = m.rows;
        nc_ = m.cols;
        cols_.resize(nc_);
        row_cols_.resize(nr_);
        row_nnz_.assign(nr_, 0);
        row_dead_.assign(nr_, false);
        col_dead_.assign(nc_, false);
        for (int j = 0; j < nc_; ++j) {
            cols_[j].reserve(m.col[j].size());
            for (auto [r, v] : m.col[j]) {
                S vv = reduce(S(v));
                if (vv == S(0)) continue;
                cols_[j].push_back({r, vv});
                row_cols_[r].push_back(j);
                row_nnz_[r]++;
            }
        }
    }

    void run(const std::vector<std::pair<int, int>>* plan) {
        if (plan) {
            for (auto [r, c] : *plan) {
                if (r < 0 || r >= nr_ || c < 0 || c >= nc_) continue;
                if (row_dead_[r] || col_dead_[c]) continue;
                S v = get(r, c);
                if (!unit(v)) continue;
                eliminate(r, c);
            }
        }
        // descending-row sweeps for whatever remains
        bool progress = true;
        while (progress) {
            progress = false;
            for (int r = nr_ - 1; r >= 0; --r) {
                if (row_dead_[r] || row_nnz_[r] == 0) continue;
                int pc = pick_pivot_col(r);
                if (pc < 0) continue;
                eliminate(r, pc);
                progress = true;
            }
        }
    }

    long pivots() const { return pivots_; }

    // the surviving block, densified (empty over F_p)
    IntMatrix residual() const {
        std::vector<int> live_rows, live_cols;
        std::vector<int> row_map(nr_, -1);
        for (int r = 0; r < nr_; ++r)
            if (!row_dead_[r] && row_nnz_[r] > 0) {
                row_map[r] = static_cast<int>(live_rows.size());
                live_rows.push_back(r);
            }
        for (int j = 0; j < nc_; ++j)
            if (!col_dead_[j] && !cols_[j].empty()) live_cols.push_back(j);
        IntMatrix out(static_cast<int>(live_rows.size()), static_cast<int>(live_cols.size()));
        for (size_t jj = 0; jj < live_cols.size(); ++jj)
            for (auto& [r, v] : cols_[live_cols[jj]])
                out.at(row_map[r], static_cast<int>(jj)) = to_mpz(v);
        return out;
    }

  private:
    S reduce(S v) const {
        if (p_ == 0) return v;
        S m = v % S(p_);
        if (m < S(0)) m += S(p_);
        return m;
    }

    static mpz_class to_mpz(const S& v) {
        if constexpr (std::is_same_v<S, int64_t>) {
            return mpz_class(static_cast<long>(v));
        } else {
            return v;
        }
    }

    bool unit(const S& v) const {
        if (p_ != 0) return v != S(0);
        return v == S(1) || v == S(-1);
    }

    S inv_mod(S a) const {
        long x = 1, x0 = 0;
        long r = to_long(a) % p_, r0 = p_;
        while (r != 0) {
            long q = r0 / r;
            long t = r0 - q * r;
            r0 = r;
            r = t;
            t = x0 - q * x;
            x0 = x;
            x = t;
        }
        long res = x0 % p_;
        if (res < 0) res += p_;
        return S(res);
    }

    static long to_long(const S& v) {
        if constexpr (std::is_same_v<S, int64_t>) {
            return static_cast<long>(v);
        } else {
            return static_cast<long>(v.get_si());
        }
    }

    S get(int r, int c) const {
        const auto& es = cols_[c];
        auto it = std::lower_bound(es.begin(), es.end(), r,
                                   [](const auto& e, int row) { return e.first < row; });
        if (it != es.end() && it->first == r) return it->second;
        return S(0);
    }

    // compact the (append-only, possibly stale) column list of a row
    void compact_row(int r) {
        std::vector<int32_t>& lst = row_cols_[r];
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
        std::vector<int32_t> live;
        live.reserve(lst.size());
        for (int c : lst)
            if (!col_dead_[c] && get(r, c) != S(0)) live.push_back(c);
        lst = std::move(live);
    }

    int pick_pivot_col(int r) {
        compact_row(r);
        int best = -1;
        size_t best_nnz = 0;
        for (int c : row_cols_[r]) {
            if (!unit(get(r, c))) continue;
            size_t n = cols_[c].size();
            if (best < 0 || n < best_nnz) {
                best = c;
                best_nnz = n;
            }
        }
        return best;
    }

    // col[dst] += m * col[src]
    void add_col_multiple(int dst, int src, const S& m) {
        const auto& s = cols_[src];
        const auto& d = cols_[dst];
        std::vector<std::pair<int32_t, S>> out;
        out.reserve(d.size() + s.size());
        size_t i = 0, j = 0;
        while (i < d.size() || j < s.size()) {
            if (j == s.size() || (i < d.size() && d[i].first < s[j].first)) {
                out.push_back(d[i++]);
            } else if (i == d.size() || s[j].first < d[i].first) {
                S v;
                if constexpr (std::is_same_v<S, int64_t>) {
                    v = reduce(checked_mul(m, s[j].second));
                } else {
                    v = reduce(m * s[j].second);
                }
                if (v != S(0)) {
                    out.push_back({s[j].first, v});
                    row_nnz_[s[j].first]++;
                    row_cols_[s[j].first].push_back(dst);
                }
                ++j;
            } else {
                S v;
                if constexpr (std::is_same_v<S, int64_t>) {
                    v = reduce(checked_add(d[i].second, checked_mul(m, s[j].second)));
                } else {
                    v = reduce(d[i].second + m * s[j].second);
                }
                if (v != S(0)) {
                    out.push_back({d[i].first, v});
                } else {
                    row_nnz_[d[i].first]--;
                }
                ++i;
                ++j;
            }
        }
        cols_[dst] = std::move(out);
    }

    void eliminate(int r, int pc) {
        S pv = get(r, pc);
        compact_row(r);
        for (int c : row_cols_[r]) {
            if (c == pc) continue;
            S entry = get(r, c);
            if (entry == S(0)) continue;
            S m;
            if (p_ == 0) {
                // pv is ±1
                if constexpr (std::is_same_v<S, int64_t>) {
                    m = checked_mul(entry, -pv);
                } else {
                    m = -(entry * pv);
                }
            } else {
                m = reduce(S(p_) - reduce(entry * inv_mod(pv)));
            }
            add_col_multiple(c, pc, m);
        }
        for (auto& [rr, vv] : cols_[pc])
            if (rr != r) row_nnz_[rr]--;
        cols_[pc].clear();
        cols_[pc].shrink_to_fit();
        col_dead_[pc] = true;
        row_dead_[r] = true;
        row_nnz_[r] = 0;
        row_cols_[r].clear();
        row_cols_[r].shrink_to_fit();
        ++pivots_;
    }

    long p_;
    int nr_ = 0, nc_ = 0;
    long pivots_ = 0;
    std::vector<std::vector<std::pair<int32_t, S>>> cols_;
    std::vector<std::vector<int32_t>> row_cols_;
    std::vector<int32_t> row_nnz_;
    std::vector<bool> row_dead_, col_dead_;
};

constexpr int kResidualDenseMax = 4096;

template <class S>
SmithInvariants invariants_with(const SparseIntMatrix& m,
                                const std::vector<std::pair<int, int>>* plan) {
    Eliminator<S> elim(m, 0);
    elim.run(plan);
    SmithInvariants out;
    out.rank = elim.pivots();
    IntMatrix rest = elim.residual();
    if (rest.rows() == 0 || rest.cols() == 0) return out;
    if (rest.rows() > kResidualDenseMax || rest.cols() > kResidualDenseMax)
        throw SizeBoundExceeded("sparse elimination residual too large to densify");
    SmithResult snf = smith_normal_form(rest);
    for (const mpz_class& d : snf.diagonal()) {
        if (d == 0) continue;
        out.rank++;
        if (d != 1 && d != -1) out.nontrivial.push_back(abs(d));
    }
    std::sort(out.nontrivial.begin(), out.nontrivial.end());
    return out;
}

}  // namespace

SmithInvariants sparse_smith_invariants(const SparseIntMatrix& m,
                                        const std::vector<std::pair<int, int>>* plan) {
    try {
        return invariants_with<int64_t>(m, plan);
    } catch (const Overflow64&) {
        // coefficient growth exceeded 64 bits: redo in full precision
        return invariants_with<mpz_class>(m, plan);
    }
}

long sparse_rank_mod_p(const SparseIntMatrix& m, long p,
                       const std::vector<std::pair<int, int>>* plan) {
    Eliminator<int64_t> elim(m, p);
    elim.run(plan);
    return elim.pivots();
}

}  // namespace properclass
