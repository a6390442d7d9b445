#ifndef QBUNDLE_REPORT_HPP
#define QBUNDLE_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qb {

enum class Status { pass, fail, skipped, vacuous };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    case Status::vacuous: return "vacuous";
  }
  return "?";
}

inline std::optional<Status> parse_status(std::string_view s) {
  for (Status x : {Status::pass, Status::fail, Status::skipped, Status::vacuous})
    if (s == status_name(x)) return x;
  return std::nullopt;
}

struct CheckRecord {
  std::string name;
  std::string anchor;  // identity being checked
  Status status = Status::pass;
  std::string residue;  // first nonzero residue, as a parseable expression
  std::vector<std::string> notes;
  std::size_t samples = 0;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct Report {
  std::vector<CheckRecord> checks;
  std::vector<std::string> notes;

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.status == Status::fail) return false;
    return true;
  }
  const CheckRecord* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  void add(CheckRecord r) { checks.push_back(std::move(r)); }
  void append(const Report& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }
  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == s;
    return n;
  }

  friend bool operator==(const Report&, const Report&) = default;
};

// Accumulates sample outcomes for one identity; the first failure wins.
class CheckBuilder {
 public:
  CheckBuilder(std::string name, std::string anchor) {
    rec_.name = std::move(name);
    rec_.anchor = std::move(anchor);
  }
  void sample(bool ok, const std::string& residue = {}) {
    ++rec_.samples;
    if (!ok && rec_.status != Status::fail) {
      rec_.status = Status::fail;
      rec_.residue = residue;
    }
  }
  void note(const std::string& n) { rec_.notes.push_back(n); }
  void set_vacuous(const std::string& why) {
    if (rec_.status == Status::pass) rec_.status = Status::vacuous;
    rec_.notes.push_back(why);
  }
  bool failed() const { return rec_.status == Status::fail; }
  CheckRecord done() const { return rec_; }

 private:
  CheckRecord rec_;
};

inline CheckRecord skipped(const std::string& name, const std::string& anchor,
                           const std::string& why) {
  CheckRecord r;
  r.name = name;
  r.anchor = anchor;
  r.status = Status::skipped;
  r.notes.push_back(why);
  return r;
}

inline CheckRecord vacuous(const std::string& name, const std::string& anchor,
                           const std::string& why) {
  CheckRecord r = skipped(name, anchor, why);
  r.status = Status::vacuous;
  return r;
}

}  // namespace qb

#endif
