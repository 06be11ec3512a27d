#include "properclass/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "properclass/errors.hpp"
#include "properclass/intmatrix.hpp"
#include "properclass/smith.hpp"

namespace properclass {

Word free_reduce(const Word& word) {
    Word out;
    for (int letter : word) {
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

Word cyclic_reduce(const Word& word) {
    Word w = free_reduce(word);
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
    }
    return w;
}

Word invert_word(const Word& word) {
    Word out;
    out.reserve(word.size());
    for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(-*it);
    return out;
}

void Presentation::validate() const {
    for (const Word& r : relators) {
        for (int letter : r) {
            int g = std::abs(letter);
            if (g < 1 || g > num_generators())
                throw Error("presentation: relator references missing generator");
        }
        if (free_reduce(r) != r) throw Error("presentation: relator not freely reduced");
    }
}

std::string Presentation::to_text() const {
    std::ostringstream out;
    out << "gens:";
    for (const auto& g : generator_names) out << " " << g;
    for (const Word& r : relators) {
        out << "; rel: ";
        for (int letter : r) {
            const std::string& name = generator_names[std::abs(letter) - 1];
            if (letter > 0) {
                out << name;
            } else {
                std::string up = name;
                for (char& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
                out << up;
            }
        }
    }
    return out.str();
}

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::istringstream in(text);
    std::string clause;
    bool have_gens = false;
    while (std::getline(in, clause, ';')) {
        auto colon = clause.find(':');
        if (colon == std::string::npos) throw ParseError("presentation clause needs ':'");
        std::string tag = clause.substr(0, colon);
        tag.erase(std::remove_if(tag.begin(), tag.end(), ::isspace), tag.end());
        std::string body = clause.substr(colon + 1);
        if (tag == "gens") {
            std::istringstream bs(body);
            std::string name;
            while (bs >> name) p.generator_names.push_back(name);
            have_gens = true;
        } else if (tag == "rel") {
            if (!have_gens) throw ParseError("rel: before gens:");
            Word w;
            for (char c : body) {
                if (std::isspace(static_cast<unsigned char>(c))) continue;
                char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
                std::string name(1, lower);
                auto it = std::find(p.generator_names.begin(), p.generator_names.end(), name);
                if (it == p.generator_names.end())
                    throw ParseError(std::string("unknown generator letter: ") + c);
                int idx = static_cast<int>(it - p.generator_names.begin()) + 1;
                w.push_back(std::isupper(static_cast<unsigned char>(c)) ? -idx : idx);
            }
            p.relators.push_back(free_reduce(w));
        } else {
            throw ParseError("unknown clause: " + tag);
        }
    }
    if (!have_gens) throw ParseError("presentation needs a gens: clause");
    p.validate();
    return p;
}

Abelianization abelianization(const Presentation& p) {
    IntMatrix m(p.num_generators(), std::max<int>(1, static_cast<int>(p.relators.size())));
    for (size_t j = 0; j < p.relators.size(); ++j)
        for (int letter : p.relators[j]) {
            int g = std::abs(letter) - 1;
            m.at(g, static_cast<int>(j)) += (letter > 0) ? 1 : -1;
        }
    SmithInvariants inv = sparse_smith_invariants(SparseIntMatrix::from_dense(m));
    Abelianization out;
    out.rank = p.num_generators() - inv.rank;
    out.torsion = inv.nontrivial;
    return out;
}

std::string Abelianization::to_string() const {
    std::ostringstream out;
    if (rank == 0 && torsion.empty()) return "0";
    bool first = true;
    if (rank > 0) {
        out << "Z";
        if (rank > 1) out << "^" << rank;
        first = false;
    }
    for (const auto& t : torsion) {
        if (!first) out << " + ";
        out << "Z/" << t.get_str();
        first = false;
    }
    return out.str();
}

namespace {

// substitute generator `gen` (1-based) by `value` in a word, then reduce
Word substitute(const Word& w, int gen, const Word& value) {
    Word out;
    Word value_inv = invert_word(value);
    for (int letter : w) {
        if (letter == gen)
            out.insert(out.end(), value.begin(), value.end());
        else if (letter == -gen)
            out.insert(out.end(), value_inv.begin(), value_inv.end());
        else
            out.push_back(letter);
    }
    return free_reduce(out);
}

// drop generator `gen` (1-based), renumbering everything above
Presentation drop_generator(const Presentation& p, int gen) {
    Presentation out;
    for (int i = 0; i < p.num_generators(); ++i)
        if (i + 1 != gen) out.generator_names.push_back(p.generator_names[i]);
    for (const Word& r : p.relators) {
        Word w;
        for (int letter : r) {
            int g = std::abs(letter);
            if (g == gen) throw std::logic_error("drop_generator: generator still used");
            w.push_back(letter > 0 ? g - (g > gen ? 1 : 0)
                                   : -(g - (g > gen ? 1 : 0)));
        }
        out.relators.push_back(std::move(w));
    }
    return out;
}

int occurrences(const Presentation& p, int gen, int* only_relator = nullptr) {
    int count = 0;
    for (size_t j = 0; j < p.relators.size(); ++j)
        for (int letter : p.relators[j])
            if (std::abs(letter) == gen) {
                ++count;
                if (only_relator) *only_relator = static_cast<int>(j);
            }
    return count;
}

}  // namespace

Presentation tietze_simplify(const Presentation& p, int budget) {
    Abelianization before = abelianization(p);
    Presentation cur = p;
    int moves = 0;
    bool changed = true;
    while (changed && moves < budget) {
        changed = false;

        // normalize: cyclically reduce, drop empties and duplicates
        for (Word& r : cur.relators) r = cyclic_reduce(r);
        std::sort(cur.relators.begin(), cur.relators.end());
        cur.relators.erase(std::unique(cur.relators.begin(), cur.relators.end()),
                           cur.relators.end());
        while (!cur.relators.empty() && cur.relators.front().empty())
            cur.relators.erase(cur.relators.begin());

        // single-letter relator: the generator is trivial
        for (size_t j = 0; j < cur.relators.size() && moves < budget; ++j) {
            if (cur.relators[j].size() != 1) continue;
            int gen = std::abs(cur.relators[j][0]);
            cur.relators.erase(cur.relators.begin() + static_cast<long>(j));
            for (Word& r : cur.relators) r = substitute(r, gen, {});
            cur = drop_generator(cur, gen);
            ++moves;
            changed = true;
            break;
        }
        if (changed) continue;

        // two-letter relator on distinct generators: identification
        for (size_t j = 0; j < cur.relators.size() && moves < budget; ++j) {
            const Word& r = cur.relators[j];
            if (r.size() != 2 || std::abs(r[0]) == std::abs(r[1])) continue;
            // r = x y, so y = x^-1
            int y = r[1];
            Word value = invert_word({r[0]});
            int gen = std::abs(y);
            if (y < 0) value = invert_word(value);
            cur.relators.erase(cur.relators.begin() + static_cast<long>(j));
            for (Word& w : cur.relators) w = substitute(w, gen, value);
            cur = drop_generator(cur, gen);
            ++moves;
            changed = true;
            break;
        }
        if (changed) continue;

        // generator occurring exactly once in exactly one relator: both
        // the relator and the generator can go
        for (int gen = 1; gen <= cur.num_generators() && moves < budget; ++gen) {
            int rel = -1;
            if (occurrences(cur, gen, &rel) != 1) continue;
            cur.relators.erase(cur.relators.begin() + rel);
            // gen occurs nowhere else now
            std::vector<Word> kept;
            for (Word& r : cur.relators) kept.push_back(std::move(r));
            cur.relators = std::move(kept);
            cur = drop_generator(cur, gen);
            ++moves;
            changed = true;
            break;
        }
    }
    cur.validate();
    if (!(abelianization(cur) == before))
        throw std::logic_error("tietze_simplify changed the abelianization");
    return cur;
}

Presentation adjoin_relators(const Presentation& p, const std::vector<Word>& words) {
    Presentation out = p;
    for (const Word& w : words) out.relators.push_back(free_reduce(w));
    out.validate();
    return out;
}

}  // namespace properclass
