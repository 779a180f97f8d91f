#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncat {

  enum class Verdict { pass, fail, not_applicable };

  std::string_view to_string(Verdict v) noexcept;

  // Cells are rendered by their ids so a counterexample stays readable when
  // it mixes cells of two graphs (functor and transformation checks).
  struct Counterexample {
    std::vector<std::string> cells;
    std::string              expected;
    std::string              actual;
    std::string              what;

    friend bool operator==(Counterexample const&, Counterexample const&)
        = default;
  };

  struct AxiomResult {
    std::string                 axiom;
    std::optional<int>          level;
    Verdict                     verdict = Verdict::pass;
    std::vector<Counterexample> counterexamples;
    // Triples/quadruples where exactly one side is defined (partial tables).
    std::vector<Counterexample> asymmetries;
    std::string                 note;

    AxiomResult() = default;
    explicit AxiomResult(std::string        name,
                         std::optional<int> lvl = std::nullopt,
                         Verdict            v   = Verdict::pass)
        : axiom(std::move(name)), level(lvl), verdict(v) {}

    static AxiomResult not_applicable(std::string        name,
                                      std::optional<int> lvl,
                                      std::string        why) {
      AxiomResult r(std::move(name), lvl, Verdict::not_applicable);
      r.note = std::move(why);
      return r;
    }

    // Sets the verdict from the counterexample list.
    AxiomResult& settle() {
      verdict = counterexamples.empty() ? Verdict::pass : Verdict::fail;
      return *this;
    }
  };

  struct AxiomReport {
    std::vector<AxiomResult> results;

    bool passed() const noexcept;
    std::size_t counterexample_count() const noexcept;

    // First result for `axiom` (and `level`, if given); nullptr if absent.
    AxiomResult const* find(std::string_view   axiom,
                            std::optional<int> level = std::nullopt) const;

    AxiomReport& add(AxiomResult r) {
      results.push_back(std::move(r));
      return *this;
    }
    AxiomReport& append(AxiomReport const& other);
  };

}  // namespace ncat
