#ifndef QSMZV_REPORT_HPP
#define QSMZV_REPORT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace qsmzv {

enum class Status { pass, fail, skip };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "skip";
  }
}

struct Case {
  std::string id;
  Status status = Status::pass;
  std::string lhs, rhs, detail;
};

struct Report {
  std::string suite;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
  std::vector<Case> cases;

  void add(std::string id, Status st, std::string lhs = {}, std::string rhs = {},
           std::string detail = {}) {
    cases.push_back(Case{std::move(id), st, std::move(lhs), std::move(rhs), std::move(detail)});
  }
  void add_check(std::string id, bool ok, std::string lhs = {}, std::string rhs = {},
                 std::string detail = {}) {
    add(std::move(id), ok ? Status::pass : Status::fail, std::move(lhs), std::move(rhs),
        std::move(detail));
  }
  void merge(const Report& o) {
    for (auto& c : o.cases) cases.push_back(c);
  }

  int count(Status s) const {
    int n = 0;
    for (auto& c : cases) n += c.status == s;
    return n;
  }
  int failures() const { return count(Status::fail); }
  bool all_pass() const { return failures() == 0; }
  int exit_code() const { return std::min(failures(), 125); }

  void sort_cases() {
    std::stable_sort(cases.begin(), cases.end(),
                     [](const Case& a, const Case& b) { return a.id < b.id; });
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["params"] = params;
    j["seed"] = seed;
    j["cases"] = nlohmann::json::array();
    for (auto& c : cases)
      j["cases"].push_back({{"id", c.id},
                            {"status", status_name(c.status)},
                            {"lhs", c.lhs},
                            {"rhs", c.rhs},
                            {"detail", c.detail}});
    j["summary"] = {{"pass", count(Status::pass)},
                    {"fail", count(Status::fail)},
                    {"skip", count(Status::skip)}};
    return j;
  }

  std::string to_csv() const {
    auto esc = [](const std::string& s) {
      std::string r = "\"";
      for (char c : s) {
        if (c == '"') r += "\"\"";
        else r += c;
      }
      return r + "\"";
    };
    std::string out = "id,status,lhs,rhs,detail\n";
    for (auto& c : cases)
      out += esc(c.id) + "," + status_name(c.status) + "," + esc(c.lhs) + "," + esc(c.rhs) + "," +
             esc(c.detail) + "\n";
    return out;
  }
};

}  // namespace qsmzv

#endif
