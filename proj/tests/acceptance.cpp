// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Usage: acceptance [criterion ...]   (default: 1..14)

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "rankalg/verify.hpp"

using namespace rankalg::verify;

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::stoi(argv[i]));
  if (ids.empty())
    for (int i = 1; i <= 14; ++i) ids.push_back(i);

  int failures = 0;
  for (const int id : ids) {
    const CriterionResult r = run_criterion(id);
    const Status s = r.status();
    // criterion 14 may skip parts of its work under caps, never fail
    const bool ok = s == Status::Pass || (id == 14 && s != Status::Fail);
    for (const auto& c : r.checks) {
      std::cout << "    [" << status_name(c.status) << "] " << c.name << " [" << c.provenance << "]: " << c.computed;
      if (c.status != Status::Pass) std::cout << " (expected " << c.expected << ")";
      if (!c.note.empty()) std::cout << "; " << c.note;
      std::cout << "\n";
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << " (" << r.title << ")";
    if (s != Status::Pass) std::cout << " status=" << status_name(s);
    std::cout << " " << secs << std::endl;
    if (!ok) ++failures;
  }
  return failures ? 1 : 0;
}
