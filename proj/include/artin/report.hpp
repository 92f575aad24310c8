#pragma once

#include <chrono>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace artin {

/// Outcome of a verification suite: named families of checks, each with an
/// instance count and the first few counterexamples. The text and JSON
/// renderings are produced from the same data.
class VerificationReport {
 public:
  struct Family {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::vector<nlohmann::json> counterexamples;
    bool passed() const { return failures == 0; }
  };

  static constexpr std::size_t kMaxCounterexamples = 5;

  VerificationReport(std::string suite, std::string graph_id, nlohmann::json parameters = nlohmann::json::object())
      : suite_(std::move(suite)), graph_(std::move(graph_id)), parameters_(std::move(parameters)),
        start_(std::chrono::steady_clock::now()) {}

  void record(const std::string& family, bool ok, const nlohmann::json& payload = {}) {
    Family& f = find_or_add(family);
    ++f.instances;
    if (!ok) {
      ++f.failures;
      if (f.counterexamples.size() < kMaxCounterexamples) f.counterexamples.push_back(payload);
    }
  }

  // Registers a family with zero instances (e.g. a vacuous check).
  void declare(const std::string& family) { find_or_add(family); }

  void merge(const VerificationReport& other) {
    for (const Family& f : other.families_) {
      Family& mine = find_or_add(f.name);
      mine.instances += f.instances;
      mine.failures += f.failures;
      for (const auto& c : f.counterexamples)
        if (mine.counterexamples.size() < kMaxCounterexamples) mine.counterexamples.push_back(c);
    }
  }

  void finish() {
    elapsed_ = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  bool passed() const {
    for (const auto& f : families_)
      if (!f.passed()) return false;
    return true;
  }

  std::size_t instances() const {
    std::size_t n = 0;
    for (const auto& f : families_) n += f.instances;
    return n;
  }

  const std::vector<Family>& families() const { return families_; }
  const std::string& suite() const { return suite_; }
  double wall_seconds() const { return elapsed_; }

  nlohmann::json to_json() const {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& f : families_)
      checks.push_back({{"name", f.name},
                        {"passed", f.passed()},
                        {"instances", f.instances},
                        {"failures", f.failures},
                        {"counterexamples", f.counterexamples}});
    return {{"suite", suite_},     {"graph", graph_},         {"parameters", parameters_},
            {"passed", passed()},  {"checks", checks},        {"wall_time_s", elapsed_}};
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "suite " << suite_ << " on " << graph_ << " " << parameters_.dump() << "\n";
    for (const auto& f : families_) {
      out << (f.passed() ? "  PASS " : "  FAIL ") << f.name << " (" << f.instances << " checked";
      if (!f.passed()) out << ", " << f.failures << " failed";
      out << ")\n";
      for (const auto& c : f.counterexamples) out << "    counterexample: " << c.dump() << "\n";
    }
    out << (passed() ? "PASS" : "FAIL") << " " << suite_ << " (" << instances() << " checks, " << elapsed_
        << " s)\n";
    return out.str();
  }

 private:
  Family& find_or_add(const std::string& name) {
    for (auto& f : families_)
      if (f.name == name) return f;
    families_.push_back(Family{name, 0, 0, {}});
    return families_.back();
  }

  std::string suite_;
  std::string graph_;
  nlohmann::json parameters_;
  std::vector<Family> families_;
  std::chrono::steady_clock::time_point start_;
  double elapsed_ = 0.0;
};

}  // namespace artin
