#include "properclass/nerve.hpp"

#include <algorithm>

namespace properclass {

namespace {

// binary search for an n-tuple in the flat lexicographically sorted cell array
int32_t find_cell(const std::vector<int32_t>& flat, int n, const int32_t* tuple) {
    long count = static_cast<long>(flat.size()) / n;
    long lo = 0, hi = count;
    while (lo < hi) {
        long mid = (lo + hi) / 2;
        const int32_t* c = flat.data() + mid * n;
        int cmp = 0;
        for (int i = 0; i < n; ++i) {
            if (c[i] != tuple[i]) {
                cmp = c[i] < tuple[i] ? -1 : 1;
                break;
            }
        }
        if (cmp < 0)
            lo = mid + 1;
        else if (cmp > 0)
            hi = mid;
        else
            return static_cast<int32_t>(mid);
    }
    throw Error("nerve: face chain not found");
}

}  // namespace

TruncatedSimplicialSet nerve_truncated(const FiniteCategory& category, int d,
                                       const Limits& limits) {
    if (d < 0) throw Error("nerve: dimension must be nonnegative");
    TruncatedSimplicialSet n;
    n.max_dim = d;
    n.counts.assign(d + 1, 0);
    n.cells.resize(d + 1);
    n.faces.resize(d + 1);

    // outgoing non-identity morphisms per object, in increasing id order
    std::vector<std::vector<int32_t>> out(category.num_objects());
    for (int m = 0; m < category.num_morphisms(); ++m)
        if (!category.is_identity(m)) out[category.mor_src[m]].push_back(m);

    long total = category.num_objects();
    if (total > limits.max_cells) throw SizeBoundExceeded("nerve cell bound exceeded");
    n.counts[0] = category.num_objects();
    n.cells[0].resize(category.num_objects());
    for (int o = 0; o < category.num_objects(); ++o) n.cells[0][o] = o;

    // chains extended on the right; each level stays lexicographically
    // sorted in the morphism ids
    if (d >= 1) {
        for (int m = 0; m < category.num_morphisms(); ++m) {
            if (category.is_identity(m)) continue;
            if (++total > limits.max_cells) throw SizeBoundExceeded("nerve cell bound exceeded");
            n.cells[1].push_back(m);
        }
        n.counts[1] = static_cast<long>(n.cells[1].size());
    }
    for (int deg = 2; deg <= d; ++deg) {
        const std::vector<int32_t>& prev = n.cells[deg - 1];
        std::vector<int32_t>& cur = n.cells[deg];
        long prev_count = n.counts[deg - 1];
        for (long p = 0; p < prev_count; ++p) {
            int32_t last_mor = prev[p * (deg - 1) + (deg - 2)];
            int last_dst = category.mor_dst[last_mor];
            for (int32_t m : out[last_dst]) {
                if (++total > limits.max_cells)
                    throw SizeBoundExceeded("nerve cell bound exceeded");
                cur.insert(cur.end(), prev.begin() + p * (deg - 1),
                           prev.begin() + (p + 1) * (deg - 1));
                cur.push_back(m);
            }
        }
        n.counts[deg] = static_cast<long>(cur.size()) / deg;
    }

    // faces
    for (int deg = 1; deg <= d; ++deg) {
        const std::vector<int32_t>& cur = n.cells[deg];
        std::vector<int32_t>& f = n.faces[deg];
        f.resize(n.counts[deg] * (deg + 1));
        std::vector<int32_t> tmp(std::max(deg - 1, 1));
        for (long c = 0; c < n.counts[deg]; ++c) {
            const int32_t* chain = cur.data() + c * deg;
            for (int i = 0; i <= deg; ++i) {
                int32_t face;
                if (deg == 1) {
                    // d_0 = target, d_1 = source
                    face = (i == 0) ? category.mor_dst[chain[0]] : category.mor_src[chain[0]];
                } else if (i == 0) {
                    face = find_cell(n.cells[deg - 1], deg - 1, chain + 1);
                } else if (i == deg) {
                    face = find_cell(n.cells[deg - 1], deg - 1, chain);
                } else {
                    int composite = category.compose(chain[i - 1], chain[i]);
                    if (category.is_identity(composite)) {
                        face = -1;
                    } else {
                        for (int t = 0; t < i - 1; ++t) tmp[t] = chain[t];
                        tmp[i - 1] = static_cast<int32_t>(composite);
                        for (int t = i + 1; t < deg; ++t) tmp[t - 1] = chain[t];
                        face = find_cell(n.cells[deg - 1], deg - 1, tmp.data());
                    }
                }
                f[c * (deg + 1) + i] = face;
            }
        }
    }
    return n;
}

void TruncatedSimplicialSet::validate_identities() const {
    for (int deg = 2; deg <= max_dim; ++deg) {
        for (long c = 0; c < counts[deg]; ++c) {
            const int32_t* f = faces[deg].data() + c * (deg + 1);
            for (int j = 1; j <= deg; ++j)
                for (int i = 0; i < j; ++i) {
                    int32_t fj = f[j];
                    int32_t fi = f[i];
                    if (fj < 0 || fi < 0) continue;
                    int32_t a = faces[deg - 1][fj * deg + i];
                    int32_t b = faces[deg - 1][fi * deg + (j - 1)];
                    if (a != b) throw Error("nerve: simplicial identity fails");
                }
        }
    }
}

ChainComplex TruncatedSimplicialSet::chain_complex() const {
    ChainComplex cc;
    cc.dims.assign(max_dim + 1, 0);
    cc.boundary.resize(max_dim + 1);
    for (int n = 0; n <= max_dim; ++n) cc.dims[n] = counts[n];
    for (int n = 1; n <= max_dim; ++n) {
        SparseIntMatrix& b = cc.boundary[n];
        b = SparseIntMatrix(static_cast<int>(counts[n - 1]), static_cast<int>(counts[n]));
        for (long c = 0; c < counts[n]; ++c) {
            const int32_t* f = faces[n].data() + c * (n + 1);
            for (int i = 0; i <= n; ++i) {
                if (f[i] < 0) continue;
                b.add(f[i], static_cast<int>(c), (i % 2 == 0) ? 1 : -1);
            }
        }
    }
    return cc;
}

long TruncatedSimplicialSet::euler_characteristic() const {
    long chi = 0;
    for (int n = 0; n <= max_dim; ++n) chi += (n % 2 == 0) ? counts[n] : -counts[n];
    return chi;
}

std::vector<PivotPlan> cone_pivot_plans(const FiniteCategory& category,
                                        const TruncatedSimplicialSet& nerve) {
    std::vector<PivotPlan> plans;
    auto initial = category.initial_object();
    auto terminal = category.terminal_object();
    if (!initial && !terminal) return plans;
    bool from_initial = initial.has_value();
    int apex = from_initial ? *initial : *terminal;

    plans.resize(nerve.max_dim + 1);
    for (int deg = 1; deg <= nerve.max_dim; ++deg) {
        PivotPlan& plan = plans[deg];
        std::vector<int32_t> tuple(deg);
        for (long r = 0; r < nerve.cell_count(deg - 1); ++r) {
            // a 0-cell is its object; higher cells are morphism chains
            const int32_t* chain = nerve.cells[deg - 1].data() + r * (deg - 1);
            if (from_initial) {
                // pair a chain not starting at the apex with its
                // extension by the unique morphism apex -> source
                int src = (deg == 1) ? static_cast<int>(r) : category.mor_src[chain[0]];
                if (src == apex) continue;
                int iota = category.hom[apex][src][0];
                tuple[0] = iota;
                for (int t = 0; t < deg - 1; ++t) tuple[t + 1] = chain[t];
            } else {
                int dst = (deg == 1) ? static_cast<int>(r) : category.mor_dst[chain[deg - 2]];
                if (dst == apex) continue;
                int tau = category.hom[dst][apex][0];
                for (int t = 0; t < deg - 1; ++t) tuple[t] = chain[t];
                tuple[deg - 1] = tau;
            }
            plan.push_back({static_cast<int>(r),
                            find_cell(nerve.cells[deg], deg, tuple.data())});
        }
    }
    return plans;
}

HomologyResult homology_of_nerve(const FiniteCategory& category, int d, Coefficients coeff,
                                 const Limits& limits) {
    TruncatedSimplicialSet n = nerve_truncated(category, d, limits);
    std::vector<PivotPlan> plans = cone_pivot_plans(category, n);
    return homology(n.chain_complex(), coeff, d - 1, plans.empty() ? nullptr : &plans);
}

}  // namespace properclass
