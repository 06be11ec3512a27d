#ifndef PROPERCLASS_PRESENTATION_HPP
#define PROPERCLASS_PRESENTATION_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace properclass {

/// A word in a presentation: signed 1-based generator indices
/// (+k is generator k-1, -k its inverse).
using Word = std::vector<int>;

Word free_reduce(const Word& word);
Word cyclic_reduce(const Word& word);
Word invert_word(const Word& word);

/// Generators-and-relators presentation. Relators are kept freely reduced.
struct Presentation {
    std::vector<std::string> generator_names;
    std::vector<Word> relators;

    int num_generators() const { return static_cast<int>(generator_names.size()); }
    void validate() const;

    /// Grammar: `gens: a b c; rel: aBab` with capital letters as inverses;
    /// one `rel:` clause per relator.
    std::string to_text() const;
};

Presentation parse_presentation(const std::string& text);

/// Rank and torsion of the abelianized group, by Smith normal form on
/// the exponent matrix.
struct Abelianization {
    long rank = 0;
    std::vector<mpz_class> torsion;  // > 1, divisibility order

    bool operator==(const Abelianization& rhs) const = default;
    std::string to_string() const;
};

Abelianization abelianization(const Presentation& p);

/// Generator- and relator-reducing Tietze transformations: removes
/// trivial relators, generators with single-letter relators, generators
/// defined by a relator they appear in only once, and substitutes
/// two-letter identifications. The abelianization is asserted unchanged
/// after every pass. `budget` caps the number of moves.
Presentation tietze_simplify(const Presentation& p, int budget = 10000);

/// Adjoin words as relators (used for torsion quotients).
Presentation adjoin_relators(const Presentation& p, const std::vector<Word>& words);

}  // namespace properclass

#endif
