#ifndef WMIN_REPORT_HPP
#define WMIN_REPORT_HPP

#include "wmin/levels.hpp"
#include "wmin/realize.hpp"

#include <string>
#include <vector>

namespace wmin {

enum class Format { Json, Csv, Markdown };

/// Accepts "json", "csv", "markdown"; throws ParseError otherwise.
Format parse_format(const std::string& s);

/// Deterministic sweep of catalog entries the classification engine accepts:
/// classical families within the size bounds used by the verification
/// suites, the D(2,1;a) samples, and all exceptional entries.
std::vector<AlgebraId> default_catalog();

/// One classification record. Rationals render as "p/q" strings, polynomials
/// as lowest-degree-first coefficient lists, rational functions as num/den
/// coefficient lists; the exclusion ledger keeps one entry per discarded
/// conformal candidate with its reason.
std::string render_classification(const LevelClassification& lc, Format f);

/// Catalog summary: one row per entry with h_vee, superdimensions and p(k).
std::string render_catalog(const std::vector<AlgebraId>& ids, Format f);

std::string render_chain(const CollapseChain& ch, Format f);

std::string render_realization(const RealizationReport& r, Format f);

/// File name of the committed golden record for one catalog entry.
std::string golden_filename(const AlgebraId& id);

/// Canonical golden document: the JSON classification record wrapped with a
/// generator note and a format version, newline-terminated. Byte-stable.
std::string golden_document(const LevelClassification& lc);

} // namespace wmin

#endif
