#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsa/families.hpp"
#include "lsa/invariants.hpp"

namespace lsa {

struct CorpusMember {
    std::string name;
    FamilyTag tag;
    SuperAlgebra algebra;
    int expected_nilindex = 0;
    std::optional<CharSeq> expected_charseq;
};

/// Every family constructor instantiated over the standard verification
/// grid: parameter values from {0, 1, -1, 1/2} (full grid when the arity is
/// at most 4, otherwise `samples` seeded samples), parametric families at
/// n in {3..6} (L, G, M, H) and n in {2..5} (E, F), plus the fixed-table
/// families at small dims. Expected nilindex is n+m for the classified
/// members and n+m+1 for the maximal-nilindex models.
std::vector<CorpusMember> family_corpus(int samples = 200, uint64_t seed = 1);

/// A compact subset (one member per family) for quick sweeps.
std::vector<CorpusMember> family_corpus_small();

}  // namespace lsa
