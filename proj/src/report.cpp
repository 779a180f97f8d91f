#include "ncat/report.hpp"

namespace ncat {

  std::string_view to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::pass: return "pass";
      case Verdict::fail: return "fail";
      case Verdict::not_applicable: return "not-applicable";
    }
    return "unknown";
  }

  bool AxiomReport::passed() const noexcept {
    for (auto const& r : results) {
      if (r.verdict == Verdict::fail) {
        return false;
      }
    }
    return true;
  }

  std::size_t AxiomReport::counterexample_count() const noexcept {
    std::size_t n = 0;
    for (auto const& r : results) {
      n += r.counterexamples.size();
    }
    return n;
  }

  AxiomResult const* AxiomReport::find(std::string_view   axiom,
                                       std::optional<int> level) const {
    for (auto const& r : results) {
      if (r.axiom == axiom && (!level || r.level == level)) {
        return &r;
      }
    }
    return nullptr;
  }

  AxiomReport& AxiomReport::append(AxiomReport const& other) {
    results.insert(results.end(), other.results.begin(), other.results.end());
    return *this;
  }

}  // namespace ncat
