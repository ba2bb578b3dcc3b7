/// \file report.hpp
/// \brief Per-axiom residual reports shared by all verifiers.
#pragma once

#include <string>
#include <vector>

namespace hopf {

struct AxiomCheck {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

struct AxiomReport {
  std::vector<AxiomCheck> entries;

  void add(std::string name, double residual, double bound) {
    entries.push_back({std::move(name), residual, residual <= bound});
  }
  void add_flag(std::string name, bool ok, double residual = 0.0) {
    entries.push_back({std::move(name), residual, ok});
  }
  void append(const AxiomReport& other, const std::string& prefix = "") {
    for (const AxiomCheck& c : other.entries)
      entries.push_back({prefix + c.name, c.residual, c.pass});
  }

  bool overall() const {
    for (const AxiomCheck& c : entries)
      if (!c.pass) return false;
    return true;
  }

  double max_residual() const {
    double m = 0.0;
    for (const AxiomCheck& c : entries) m = std::max(m, c.residual);
    return m;
  }

  const AxiomCheck* find(const std::string& name) const {
    for (const AxiomCheck& c : entries)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace hopf
