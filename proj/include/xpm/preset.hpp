#pragma once

// Named system presets plus a small key=value config format for custom media.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "xpm/constants.hpp"
#include "xpm/ladder.hpp"

namespace xpm {

// Warm Rb vapor, 5S-5P-5D ladder (control 780.2 nm, probe 776 nm).
// The density is chosen to hit the requested on-resonance optical depth.
inline LadderSystem rb_preset(double od = 15.0, double length = 0.01) {
  if (!(od > 0.0) || !(length > 0.0))
    throw std::invalid_argument("rb_preset: od and length must be positive");
  LadderSystem sys;
  sys.gamma1 = 2.0 * kPi * 6.0e6;     // rad/s
  sys.gamma2 = 2.0 * kPi * 0.67e6;    // rad/s
  sys.lambda_control = 780.2e-9;      // m
  sys.lambda_probe = 776.0e-9;        // m
  sys.mu2 = 8.4e-30;                  // C m
  sys.mu1 = mu1_from_gamma1(sys.gamma1, sys.lambda_control);
  sys.length = length;
  sys.number_density = 2.0 * kPi * od /
                       (3.0 * length * sys.lambda_control * sys.lambda_control);
  sys.validate();
  return sys;
}

inline std::vector<std::string> preset_names() { return {"rb"}; }

inline LadderSystem make_preset(const std::string& name, double od = 15.0,
                                double length = 0.01) {
  if (name == "rb") return rb_preset(od, length);
  throw std::invalid_argument("unknown preset '" + name + "'");
}

// key=value config.  '#' starts a comment, blank lines ignored.  Keys match
// the LadderSystem field names; mu1 may be omitted and is then derived from
// gamma1 and lambda_control.
inline LadderSystem load_preset(std::istream& in,
                                const std::string& source = "<stream>") {
  static const std::vector<std::string> known = {
      "mu1",          "mu2",          "gamma1",         "gamma2",
      "lambda_control", "lambda_probe", "number_density", "length"};

  std::map<std::string, double> values;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw std::runtime_error(source + ":" + std::to_string(lineno) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto strip = [](std::string s) {
      const char* ws = " \t\r";
      s.erase(0, s.find_first_not_of(ws));
      if (auto last = s.find_last_not_of(ws); last != std::string::npos)
        s.erase(last + 1);
      else
        s.clear();
      return s;
    };
    line = strip(line);
    if (line.empty()) continue;

    auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected key=value, got '" + line + "'");
    const std::string key = strip(line.substr(0, eq));
    const std::string val = strip(line.substr(eq + 1));
    if (std::find(known.begin(), known.end(), key) == known.end())
      fail("unknown key '" + key + "'");
    if (values.count(key)) fail("duplicate key '" + key + "'");

    std::size_t used = 0;
    double parsed = 0.0;
    try {
      parsed = std::stod(val, &used);
    } catch (const std::exception&) {
      fail("field '" + key + "': cannot parse '" + val + "' as a number");
    }
    if (used != val.size())
      fail("field '" + key + "': trailing junk in '" + val + "'");
    values[key] = parsed;
  }

  for (const auto& key : known) {
    if (key == "mu1") continue;  // optional, derived below
    if (!values.count(key))
      throw std::runtime_error(source + ": missing required key '" + key + "'");
  }

  LadderSystem sys;
  sys.mu2 = values["mu2"];
  sys.gamma1 = values["gamma1"];
  sys.gamma2 = values["gamma2"];
  sys.lambda_control = values["lambda_control"];
  sys.lambda_probe = values["lambda_probe"];
  sys.number_density = values["number_density"];
  sys.length = values["length"];
  sys.mu1 = values.count("mu1") ? values["mu1"]
                                : mu1_from_gamma1(sys.gamma1, sys.lambda_control);
  sys.validate();
  return sys;
}

inline LadderSystem load_preset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open preset file '" + path + "'");
  return load_preset(in, path);
}

inline void save_preset(const LadderSystem& sys, std::ostream& out) {
  auto emit = [&](const char* key, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << key << " = " << buf << "\n";
  };
  emit("mu1", sys.mu1);
  emit("mu2", sys.mu2);
  emit("gamma1", sys.gamma1);
  emit("gamma2", sys.gamma2);
  emit("lambda_control", sys.lambda_control);
  emit("lambda_probe", sys.lambda_probe);
  emit("number_density", sys.number_density);
  emit("length", sys.length);
}

}  // namespace xpm
