#pragma once

// Pass/fail reports produced by the verification harness. A failing report
// always carries at least one witness; numeric checks may attach a metrics
// table suitable for CSV output.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace rankcrank {

struct Witness {
  std::string location;
  std::string expected;
  std::string actual;
};

struct MetricRow {
  long n = 0;
  std::string exact;
  std::string pred1;
  std::string pred2;
  std::string rel_err;
  std::string scaled_remainder;
};

class VerdictReport {
 public:
  explicit VerdictReport(std::string check_name) : check_name_(std::move(check_name)) {}

  void add_parameter(const std::string& key, const std::string& value) {
    parameters_.emplace_back(key, value);
  }

  // The only way to flip the status to fail, so a witness is always present.
  void fail(std::string location, std::string expected, std::string actual) {
    pass_ = false;
    witnesses_.push_back({std::move(location), std::move(expected), std::move(actual)});
  }

  void add_metric(MetricRow row) { metrics_.push_back(std::move(row)); }
  void add_note(std::string note) { notes_.push_back(std::move(note)); }

  const std::string& check_name() const { return check_name_; }
  bool pass() const { return pass_; }
  const std::vector<Witness>& witnesses() const { return witnesses_; }
  const std::vector<MetricRow>& metrics() const { return metrics_; }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["check"] = check_name_;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : parameters_) params[k] = v;
    j["parameters"] = params;
    j["status"] = pass_ ? "pass" : "fail";
    j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : witnesses_) {
      j["witnesses"].push_back({{"location", w.location}, {"expected", w.expected}, {"actual", w.actual}});
    }
    if (!metrics_.empty()) {
      j["metrics"] = nlohmann::ordered_json::array();
      for (const auto& m : metrics_) {
        j["metrics"].push_back({{"n", m.n},
                                {"exact", m.exact},
                                {"pred1", m.pred1},
                                {"pred2", m.pred2},
                                {"rel_err", m.rel_err},
                                {"scaled_remainder", m.scaled_remainder}});
      }
    }
    if (!notes_.empty()) j["notes"] = notes_;
    return j;
  }

  std::string metrics_csv() const {
    std::string out = "n,exact,pred1,pred2,rel_err,scaled_remainder\n";
    for (const auto& m : metrics_) {
      out += std::to_string(m.n) + "," + m.exact + "," + m.pred1 + "," + m.pred2 + "," +
             m.rel_err + "," + m.scaled_remainder + "\n";
    }
    return out;
  }

 private:
  std::string check_name_;
  std::vector<std::pair<std::string, std::string>> parameters_;
  bool pass_ = true;
  std::vector<Witness> witnesses_;
  std::vector<MetricRow> metrics_;
  std::vector<std::string> notes_;
};

}  // namespace rankcrank
