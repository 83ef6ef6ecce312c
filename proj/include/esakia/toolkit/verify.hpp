#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "esakia/constructions/staged.hpp"
#include "esakia/toolkit/documents.hpp"
#include "esakia/toolkit/report.hpp"

namespace esakia {

/// Each routine appends verdicts to `r`. A library error inside a check is
/// recorded as a failing verdict rather than propagated.

/// Recognizers (value only, always passing) plus enough gaps and, when given,
/// agreement with the document's kind hint.
void verify_structure(Report& r, const FinitePoset& p, std::optional<PosetKind> kind = std::nullopt);

/// Upset algebra: residuation, the Gödel equation against the root-system
/// recognizer, and the poset double dual.
void verify_algebra(Report& r, const FinitePoset& p);

/// Root-system subbase topology: Priestley, Esakia, discrete, and the spectrum
/// of its clopen upsets recovering P.
void verify_root_topology(Report& r, const FinitePoset& p);

/// Staged topology on a tree: final-topology checks, open preservation across
/// levels, climb laws, Main Lemma witnesses, the subcover engine on the full
/// top subbase, separation witnesses and downset openness.
void verify_staged(Report& r, const FinitePoset& tree, const PlusChoice& choice = {});

/// Everything that applies to P.
Report verify_poset(const FinitePoset& p, std::string_view input,
                    std::optional<PosetKind> kind = std::nullopt);

}  // namespace esakia
