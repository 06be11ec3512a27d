#include "properclass/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace properclass {

Perm Perm::identity(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& rhs) const {
    std::vector<int> out(img.size());
    for (size_t i = 0; i < img.size(); ++i) out[i] = rhs.img[img[i]];
    return Perm(std::move(out));
}

Perm Perm::inverse() const {
    std::vector<int> out(img.size());
    for (size_t i = 0; i < img.size(); ++i) out[img[i]] = static_cast<int>(i);
    return Perm(std::move(out));
}

int Perm::order() const {
    Perm p = *this;
    int n = 1;
    while (!p.is_identity()) {
        p = p * *this;
        ++n;
    }
    return n;
}

bool Perm::is_identity() const {
    for (size_t i = 0; i < img.size(); ++i)
        if (img[i] != static_cast<int>(i)) return false;
    return true;
}

std::string Perm::cycle_string() const {
    std::vector<bool> seen(img.size(), false);
    std::string out;
    for (size_t i = 0; i < img.size(); ++i) {
        if (seen[i] || img[i] == static_cast<int>(i)) continue;
        out += '(';
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += ' ';
            out += std::to_string(j + 1);
            first = false;
            j = img[j];
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

Perm parse_cycles(const std::string& text, int degree_hint) {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    int max_point = degree_hint;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c != '(') throw ParseError("expected '(' in cycle notation: " + text);
        ++i;
        std::vector<int> cyc;
        std::string num;
        for (; i < text.size() && text[i] != ')'; ++i) {
            char d = text[i];
            if (std::isdigit(static_cast<unsigned char>(d))) {
                num += d;
            } else if (std::isspace(static_cast<unsigned char>(d)) || d == ',') {
                if (!num.empty()) {
                    cyc.push_back(std::stoi(num) - 1);
                    num.clear();
                }
            } else {
                throw ParseError("unexpected character in cycle notation: " + text);
            }
        }
        if (i == text.size()) throw ParseError("unterminated cycle: " + text);
        ++i;  // ')'
        if (!num.empty()) cyc.push_back(std::stoi(num) - 1);
        for (int p : cyc) {
            if (p < 0) throw ParseError("points are 1-based: " + text);
            max_point = std::max(max_point, p + 1);
        }
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
    }
    std::vector<int> img(std::max(max_point, 1));
    std::iota(img.begin(), img.end(), 0);
    for (const auto& cyc : cycles) {
        for (size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k];
            int to = cyc[(k + 1) % cyc.size()];
            img[from] = to;
        }
    }
    // reject non-permutations such as "(1 2)(2 3)"
    std::vector<int> check = img;
    std::sort(check.begin(), check.end());
    for (size_t k = 0; k < check.size(); ++k)
        if (check[k] != static_cast<int>(k))
            throw ParseError("cycles do not form a permutation: " + text);
    return Perm(std::move(img));
}

bool PermGroup::contains(const Perm& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

int PermGroup::element_index(const Perm& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || !(*it == p)) return -1;
    return static_cast<int>(it - elements.begin());
}

bool Subgroup::contains(const Perm& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

int FamilySpec::index_of(const Subgroup& sub) const {
    for (size_t i = 0; i < members.size(); ++i)
        if (members[i] == sub) return static_cast<int>(i);
    return -1;
}

namespace {

std::vector<Perm> close_set(const std::vector<Perm>& seed, int degree,
                            long max_order) {
    std::set<Perm> seen;
    seen.insert(Perm::identity(degree));
    std::vector<Perm> todo(seen.begin(), seen.end());
    for (const Perm& g : seed)
        if (seen.insert(g).second) todo.push_back(g);
    // product closure; inverses come for free in a finite closure
    for (size_t head = 0; head < todo.size(); ++head) {
        for (const Perm& g : seed) {
            Perm p = todo[head] * g;
            if (seen.insert(p).second) {
                if (static_cast<long>(seen.size()) > max_order)
                    throw OrderBoundExceeded("group closure exceeds order bound " +
                                             std::to_string(max_order));
                todo.push_back(std::move(p));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

PermGroup close_generators(const std::vector<Perm>& generators,
                           const Limits& limits) {
    int degree = 1;
    for (const Perm& g : generators) degree = std::max(degree, g.degree());
    if (degree > limits.max_degree)
        throw OrderBoundExceeded("degree " + std::to_string(degree) +
                                 " exceeds bound " +
                                 std::to_string(limits.max_degree));
    for (const Perm& g : generators)
        if (g.degree() != degree)
            throw ParseError("generators act on different degrees");
    PermGroup group;
    group.degree = degree;
    group.generators = generators;
    group.elements = close_set(generators, degree, limits.max_group_order);
    return group;
}

std::vector<Subgroup> all_subgroups(const PermGroup& group,
                                    const Limits& limits) {
    if (group.order() > limits.max_group_order)
        throw OrderBoundExceeded("group order exceeds bound");

    std::set<std::vector<Perm>> found;
    found.insert({Perm::identity(group.degree)});

    // cyclic subgroups first
    std::vector<std::vector<Perm>> worklist;
    for (const Perm& g : group.elements) {
        std::vector<Perm> cyc = close_set({g}, group.degree, group.order());
        if (found.insert(cyc).second) worklist.push_back(cyc);
    }

    // breadth-first closure under join with cyclic subgroups
    std::vector<std::vector<Perm>> cyclics = worklist;
    for (size_t head = 0; head < worklist.size(); ++head) {
        for (const auto& cyc : cyclics) {
            std::vector<Perm> seed = worklist[head];
            seed.insert(seed.end(), cyc.begin(), cyc.end());
            std::vector<Perm> join = close_set(seed, group.degree, group.order());
            if (found.insert(join).second) worklist.push_back(join);
        }
    }

    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& elems : found) out.push_back(Subgroup{elems});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements < b.elements;
    });
    return out;
}

FamilySpec finite_family(const PermGroup& group, const Limits& limits) {
    FamilySpec family{all_subgroups(group, limits)};
    validate_family(group, family);
    return family;
}

Subgroup conjugate_subgroup(const Subgroup& sub, const Perm& g) {
    Perm ginv = g.inverse();
    std::vector<Perm> elems;
    elems.reserve(sub.elements.size());
    for (const Perm& h : sub.elements) elems.push_back(ginv * h * g);
    std::sort(elems.begin(), elems.end());
    return Subgroup{std::move(elems)};
}

void validate_family(const PermGroup& group, const FamilySpec& family) {
    if (family.members.empty()) throw InvalidFamily("family is empty");
    for (const Subgroup& sub : family.members) {
        // closure of each member
        for (const Perm& a : sub.elements) {
            if (!sub.contains(a.inverse()))
                throw InvalidFamily("member not closed under inverse");
            for (const Perm& b : sub.elements)
                if (!sub.contains(a * b))
                    throw InvalidFamily("member not closed under product");
        }
        // conjugation closure
        for (const Perm& g : group.elements) {
            if (family.index_of(conjugate_subgroup(sub, g)) < 0)
                throw InvalidFamily("family not closed under conjugation");
        }
        // subgroup closure: cyclic subgroups of each member must appear
        for (const Perm& a : sub.elements) {
            std::vector<Perm> cyc = close_set({a}, group.degree, group.order());
            if (family.index_of(Subgroup{cyc}) < 0)
                throw InvalidFamily("family not closed under subgroups");
        }
    }
}

namespace {

PermGroup from_cycles(std::initializer_list<const char*> gens) {
    int degree = 0;
    std::vector<Perm> parsed;
    for (const char* g : gens) {
        Perm p = parse_cycles(g);
        degree = std::max(degree, p.degree());
    }
    for (const char* g : gens) parsed.push_back(parse_cycles(g, degree));
    return close_generators(parsed);
}

}  // namespace

PermGroup catalogue_perm_group(const std::string& name) {
    if (name == "Z1") {
        return close_generators({Perm::identity(1)});
    } else if (name == "Z2") {
        return from_cycles({"(1 2)"});
    } else if (name == "Z3") {
        return from_cycles({"(1 2 3)"});
    } else if (name == "Z4") {
        return from_cycles({"(1 2 3 4)"});
    } else if (name == "Z5") {
        return from_cycles({"(1 2 3 4 5)"});
    } else if (name == "Z6") {
        return from_cycles({"(1 2 3 4 5 6)"});
    } else if (name == "Z2xZ2") {
        return from_cycles({"(1 2)", "(3 4)"});
    } else if (name == "S3") {
        return from_cycles({"(1 2)", "(1 2 3)"});
    } else if (name == "D4") {
        return from_cycles({"(1 2 3 4)", "(1 3)"});
    } else if (name == "A4") {
        return from_cycles({"(1 2 3)", "(2 3 4)"});
    }
    throw UnknownGroup("no catalogue group named '" + name + "'");
}

std::vector<std::string> catalogue_perm_group_names() {
    return {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "S3", "D4", "A4"};
}

PermGroup parse_perm_group(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> cycle_lines;
    std::string name;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("perm:", 0) == 0) {
            cycle_lines.push_back(line.substr(5));
        } else if (name.empty() && cycle_lines.empty()) {
            name = line;
        } else {
            throw ParseError("unexpected line in group file: " + line);
        }
    }
    if (!name.empty() && !cycle_lines.empty())
        throw ParseError("mix of catalogue name and perm: lines");
    if (!name.empty()) return catalogue_perm_group(name);
    if (cycle_lines.empty()) throw ParseError("empty group description");
    int degree = 0;
    for (const auto& c : cycle_lines)
        degree = std::max(degree, parse_cycles(c).degree());
    std::vector<Perm> gens;
    for (const auto& c : cycle_lines) gens.push_back(parse_cycles(c, degree));
    return close_generators(gens);
}

}  // namespace properclass
