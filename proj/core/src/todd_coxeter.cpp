#include "properclass/todd_coxeter.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "properclass/errors.hpp"

namespace properclass {

namespace {

inline int column(int letter) {
    int g = std::abs(letter) - 1;
    return 2 * g + (letter < 0 ? 1 : 0);
}

inline int inverse_column(int col) { return col ^ 1; }

// Working state for the enumeration: a coset table over columns
// (generators and inverses) with union-find coincidence tracking.
struct Enumerator {
    int ncols;
    long max_cosets;
    std::vector<std::vector<int>> tab;  // -1 = undefined
    std::vector<int> parent;            // union-find
    std::vector<char> dead;
    std::vector<std::pair<int, int>> defs;  // definition per coset
    std::deque<std::pair<int, int>> coincidences;
    long live = 0;
    bool changed = false;

    Enumerator(int cols, long max) : ncols(cols), max_cosets(max) { new_coset(-1, -1); }

    int find(int c) {
        while (parent[c] != c) c = parent[c] = parent[parent[c]];
        return c;
    }

    int new_coset(int from, int col) {
        tab.emplace_back(ncols, -1);
        parent.push_back(static_cast<int>(tab.size()) - 1);
        dead.push_back(0);
        defs.push_back({from, col});
        ++live;
        if (live > max_cosets) throw OrderBoundExceeded("coset bound");
        return static_cast<int>(tab.size()) - 1;
    }

    void set(int a, int col, int b) {
        a = find(a);
        b = find(b);
        int ex = tab[a][col];
        if (ex >= 0 && find(ex) != b) {
            coincidences.push_back({find(ex), b});
        } else {
            if (tab[a][col] != b) changed = true;
            tab[a][col] = b;
        }
        int ex2 = tab[b][inverse_column(col)];
        if (ex2 >= 0 && find(ex2) != a) {
            coincidences.push_back({find(ex2), a});
        } else {
            if (tab[b][inverse_column(col)] != a) changed = true;
            tab[b][inverse_column(col)] = a;
        }
    }

    void process_coincidences() {
        while (!coincidences.empty()) {
            auto [a, b] = coincidences.front();
            coincidences.pop_front();
            a = find(a);
            b = find(b);
            if (a == b) continue;
            if (b < a) std::swap(a, b);
            // merge b into a
            parent[b] = a;
            dead[b] = 1;
            --live;
            changed = true;
            for (int col = 0; col < ncols; ++col) {
                int t = tab[b][col];
                if (t < 0) continue;
                t = find(t);
                int ex = tab[a][col];
                if (ex >= 0 && find(ex) != t) {
                    coincidences.push_back({find(ex), t});
                } else {
                    tab[a][col] = t;
                    int back = tab[t][inverse_column(col)];
                    if (back >= 0 && find(back) != a) {
                        coincidences.push_back({find(back), a});
                    } else {
                        tab[t][inverse_column(col)] = a;
                    }
                }
            }
        }
    }

    // scan `word` from coset c, defining cosets to fill the gap (HLT)
    void scan_and_fill(int c, const Word& word) {
        if (word.empty()) return;
        for (;;) {
            c = find(c);
            int f = c;
            size_t i = 0;
            while (i < word.size()) {
                int next = tab[f][column(word[i])];
                if (next < 0) break;
                f = find(next);
                ++i;
            }
            if (i == word.size()) {
                if (f != c) {
                    coincidences.push_back({f, c});
                    process_coincidences();
                }
                return;
            }
            int b = c;
            size_t j = word.size();
            while (j > i) {
                int prev = tab[b][inverse_column(column(word[j - 1]))];
                if (prev < 0) break;
                b = find(prev);
                --j;
            }
            if (j == i + 1) {
                // single gap: deduction
                set(f, column(word[i]), b);
                process_coincidences();
                return;
            }
            if (j == i) {
                // both scans met: forces f == b
                if (find(f) != find(b)) {
                    coincidences.push_back({find(f), find(b)});
                    process_coincidences();
                }
                return;
            }
            // fill one slot and rescan
            int fresh = new_coset(f, column(word[i]));
            set(f, column(word[i]), fresh);
            process_coincidences();
        }
    }
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_words,
                        long max_cosets) {
    p.validate();
    if (max_cosets < 1) throw Error("todd_coxeter: max_cosets must be positive");
    CosetTable out;
    out.num_generators = p.num_generators();
    if (p.num_generators() == 0) {
        // the empty presentation of the trivial group
        out.status = CosetTable::Status::complete;
        out.table.assign(1, {});
        out.definitions.assign(1, {-1, -1});
        return out;
    }

    Enumerator en(2 * p.num_generators(), max_cosets);
    try {
        for (const Word& w : subgroup_words) en.scan_and_fill(0, free_reduce(w));
        // scan to a fixpoint: coincidences can retire rows whose entries
        // were deduced after their own pass
        do {
            en.changed = false;
            for (size_t c = 0; c < en.tab.size(); ++c) {
                if (en.dead[c]) continue;
                for (const Word& r : p.relators) en.scan_and_fill(static_cast<int>(c), r);
                // close the row so the table becomes total
                for (int col = 0; col < en.ncols; ++col) {
                    if (en.dead[c]) break;
                    int cc = en.find(static_cast<int>(c));
                    if (cc != static_cast<int>(c)) break;
                    if (en.tab[cc][col] < 0) {
                        int fresh = en.new_coset(cc, col);
                        en.set(cc, col, fresh);
                        en.process_coincidences();
                    }
                }
            }
        } while (en.changed);
    } catch (const OrderBoundExceeded&) {
        out.status = CosetTable::Status::overflowed;
        return out;
    }

    // compact live cosets in discovery order
    std::vector<int> renumber(en.tab.size(), -1);
    int next = 0;
    for (size_t c = 0; c < en.tab.size(); ++c)
        if (!en.dead[c] && en.find(static_cast<int>(c)) == static_cast<int>(c))
            renumber[c] = next++;
    out.table.assign(next, std::vector<int>(en.ncols, -1));
    out.definitions.assign(next, {-1, -1});
    for (size_t c = 0; c < en.tab.size(); ++c) {
        if (renumber[c] < 0) continue;
        for (int col = 0; col < en.ncols; ++col) {
            int t = en.tab[c][col];
            if (t >= 0) out.table[renumber[c]][col] = renumber[en.find(t)];
        }
    }
    // definitions from the compact table (BFS from coset 0); the original
    // defining transitions may have been merged away
    {
        std::vector<char> seen(next, 0);
        std::deque<int> q{0};
        seen[0] = 1;
        while (!q.empty()) {
            int c = q.front();
            q.pop_front();
            for (int col = 0; col < en.ncols; ++col) {
                int t = out.table[c][col];
                if (t >= 0 && !seen[t]) {
                    seen[t] = 1;
                    out.definitions[t] = {c, col};
                    q.push_back(t);
                }
            }
        }
        for (int c = 0; c < next; ++c)
            if (!seen[c]) throw Error("todd_coxeter: unreachable coset");
    }

    bool complete = true;
    for (const auto& row : out.table)
        for (int e : row)
            if (e < 0) complete = false;
    out.status = complete ? CosetTable::Status::complete : CosetTable::Status::overflowed;
    if (out.status == CosetTable::Status::complete) out.verify(p, subgroup_words);
    return out;
}

int CosetTable::act(int coset, int letter) const {
    int col = 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0);
    return table[coset][col];
}

void CosetTable::verify(const Presentation& p, const std::vector<Word>& subgroup) const {
    for (const Word& w : subgroup) {
        int c = 0;
        for (int letter : free_reduce(w)) c = act(c, letter);
        if (c != 0) throw Error("coset table: subgroup word does not fix coset 0");
    }
    for (size_t c = 0; c < table.size(); ++c)
        for (const Word& r : p.relators) {
            int t = static_cast<int>(c);
            for (int letter : r) t = act(t, letter);
            if (t != static_cast<int>(c)) throw Error("coset table: relator scan fails");
        }
}

GroupTable group_table(const Presentation& p, const CosetTable& ct) {
    if (ct.status != CosetTable::Status::complete)
        throw Error("group_table needs a completed enumeration");
    GroupTable g;
    g.order = ct.index();
    g.element_words.assign(g.order, {});
    // defining word per element, tracing definitions back to the identity
    for (long c = 1; c < g.order; ++c) {
        Word w;
        int cur = static_cast<int>(c);
        while (cur != 0) {
            auto [from, col] = ct.definitions[cur];
            int gen = col / 2 + 1;
            w.push_back(col % 2 == 0 ? gen : -gen);
            cur = from;
        }
        std::reverse(w.begin(), w.end());
        g.element_words[c] = std::move(w);
    }
    g.mult.assign(g.order, std::vector<int>(g.order, -1));
    for (long a = 0; a < g.order; ++a)
        for (long b = 0; b < g.order; ++b) {
            int c = static_cast<int>(a);
            for (int letter : g.element_words[b]) c = ct.act(c, letter);
            g.mult[a][b] = c;
        }
    g.inverse.assign(g.order, -1);
    for (long a = 0; a < g.order; ++a)
        for (long b = 0; b < g.order; ++b)
            if (g.mult[a][b] == 0) g.inverse[a] = static_cast<int>(b);
    (void)p;
    return g;
}

}  // namespace properclass
