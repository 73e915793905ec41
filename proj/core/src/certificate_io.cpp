#include "stsig/certificate_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace stsig {

namespace {

nlohmann::json sig_to_json(const Signature& s) {
  return nlohmann::json::array({s.alpha, s.beta, s.gamma});
}

Signature sig_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument(std::string(what) + " must be [a,b,g]");
  return Signature(j[0].get<std::int64_t>(), j[1].get<std::int64_t>(),
                   j[2].get<std::int64_t>());
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
  nlohmann::json j;
  j["version"] = 1;
  j["input"] = sig_to_json(cert.input);
  j["canonical"] = to_string(cert.canonical);
  j["steps"] = nlohmann::json::array();
  for (const CertificateStep& step : cert.steps) {
    nlohmann::json js;
    js["family"] = std::string(1, to_char(step.instance.family));
    js["parent"] = sig_to_json(step.instance.parent);
    js["n"] = step.instance.n;
    js["r"] = step.instance.r;
    js["s"] = step.instance.s;
    js["direction"] = step.direction == StepDirection::Up ? "up" : "down";
    js["from"] = sig_to_json(step.from);
    js["to"] = sig_to_json(step.to);
    j["steps"].push_back(std::move(js));
  }
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad certificate JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("certificate must be an object");
  if (!j.contains("version") || j.at("version").get<std::int64_t>() != 1)
    throw std::invalid_argument("unsupported certificate version");
  Certificate cert;
  cert.input = sig_from_json(j.at("input"), "input");
  cert.canonical = canonical_class_from_string(j.at("canonical").get<std::string>());
  for (const auto& js : j.at("steps")) {
    CertificateStep step;
    const std::string fam = js.at("family").get<std::string>();
    if (fam.size() != 1) throw std::invalid_argument("family must be A, B or C");
    step.instance.family = family_from_char(fam[0]);
    step.instance.parent = sig_from_json(js.at("parent"), "parent");
    step.instance.n = js.at("n").get<std::int64_t>();
    step.instance.r = js.value("r", std::vector<std::int64_t>{});
    step.instance.s = js.value("s", std::vector<std::int64_t>{});
    const std::string dir = js.at("direction").get<std::string>();
    if (dir == "up")
      step.direction = StepDirection::Up;
    else if (dir == "down")
      step.direction = StepDirection::Down;
    else
      throw std::invalid_argument("direction must be 'up' or 'down'");
    step.from = sig_from_json(js.at("from"), "from");
    step.to = sig_from_json(js.at("to"), "to");
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

}  // namespace stsig
