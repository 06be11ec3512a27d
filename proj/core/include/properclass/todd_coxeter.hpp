#ifndef PROPERCLASS_TODD_COXETER_HPP
#define PROPERCLASS_TODD_COXETER_HPP

#include "properclass/presentation.hpp"

namespace properclass {

/// Coset table produced by Todd-Coxeter enumeration. When complete, the
/// row count is the index of the enumerated subgroup; an overflow is a
/// status, never an answer.
struct CosetTable {
    enum class Status { complete, overflowed };

    Status status = Status::overflowed;
    int num_generators = 0;
    /// row per live coset, column 2g for generator g, 2g+1 for its
    /// inverse; complete tables have no undefined (-1) entries
    std::vector<std::vector<int>> table;
    /// definition of each coset > 0: (previous coset, column)
    std::vector<std::pair<int, int>> definitions;

    long index() const { return static_cast<long>(table.size()); }
    int act(int coset, int letter) const;  // letter: signed 1-based generator

    /// every relator traces to its starting coset from every coset, and
    /// subgroup generator words fix coset 0
    void verify(const Presentation& p, const std::vector<Word>& subgroup) const;
};

/// HLT-style enumeration with coincidence handling and deterministic
/// coset numbering. Overflow (more than max_cosets live rows) is reported
/// in the status.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_words,
                        long max_cosets = 100000);

/// Multiplication table of a finite group from a completed enumeration
/// of the trivial subgroup: cosets are the elements, entry (a, b) = a*b.
/// Also returns, per element, a defining word in the generators.
struct GroupTable {
    long order = 0;
    std::vector<std::vector<int>> mult;
    std::vector<Word> element_words;
    std::vector<int> inverse;

    int multiply(int a, int b) const { return mult[a][b]; }
};

GroupTable group_table(const Presentation& p, const CosetTable& complete_table);

}  // namespace properclass

#endif
