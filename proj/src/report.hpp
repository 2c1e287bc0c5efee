#pragma once

#include <string>
#include <vector>

#include "classify.hpp"
#include "correspond.hpp"
#include "semantics.hpp"

namespace sahl {

std::string render_classification(const ClassificationReport& r);

struct CorrespondOptions {
  bool raw = false;          // only the unsimplified correspondent, one line
  bool no_simplify = false;  // report the unsimplified correspondent
  bool trace = false;        // per-conjunct scheme, α-definitions, raw and simplified
};

struct VerdictRecord {
  int max_n = 3;
  std::size_t sample4 = 0;
  std::uint64_t seed = default_seed;
  Verdict verdict;
};

const FoFormula& selected_correspondent(const CorrespondenceResult& r, const CorrespondOptions& o);

std::string render_correspondence(const CorrespondenceResult& r, const CorrespondOptions& o);
std::string render_json(const CorrespondenceResult& r, const CorrespondOptions& o,
                        const std::vector<VerdictRecord>& verdicts = {});
// fof(name, conjecture, …) with `free` as a constant and bound variables uppercased.
std::string to_tptp(const FoFormula& f, const std::string& name = "corr", const std::string& free = "x");

std::string render_verdict(const Verdict& v);

}  // namespace sahl
