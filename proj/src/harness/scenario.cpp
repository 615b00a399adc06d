// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "fmasec/harness/scenario.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace fmasec {

ScenarioError::ScenarioError(std::size_t line, std::string field, const std::string& what)
    : std::runtime_error(what), line_(line), field_(std::move(field)) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string fmt_g(double v, int digits = 17) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

// Recursive descent over + - * / ( ) with unary sign, numbers, pi and lambda.
class ExprParser {
 public:
  ExprParser(std::string_view s, double wavelength) : s_(s), lambda_(wavelength) {}

  double parse() {
    const double v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double expr() {
    double v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  double term() {
    double v = factor();
    for (;;) {
      if (eat('*')) v *= factor();
      else if (eat('/')) v /= factor();
      else return v;
    }
  }

  double factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    if (eat('(')) {
      const double v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    skip_ws();
    if (pos_ >= s_.size()) fail("expected a value");
    const char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const auto id = s_.substr(start, pos_ - start);
      if (id == "pi") return kPi;
      if (id == "lambda") {
        if (!(lambda_ > 0.0)) fail("'lambda' is not available here");
        return lambda_;
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(id) + "'");
    }
    double v = 0.0;
    const auto res = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (res.ec != std::errc()) fail("expected a number");
    pos_ = static_cast<std::size_t>(res.ptr - s_.data());
    return v;
  }

  std::string_view s_;
  double lambda_;
  std::size_t pos_ = 0;
};

struct Entry {
  std::size_t line;
  std::string value;
};

class Reader {
 public:
  Reader(const std::string& key, const Entry& e, double lambda) : key_(key), e_(e), lambda_(lambda) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw ScenarioError(e_.line, key_, "line " + std::to_string(e_.line) + ", field '" + key_ + "': " + msg);
  }

  double number() const {
    try {
      const double v = evaluate_expression(e_.value, lambda_);
      if (!std::isfinite(v)) fail("value is not finite");
      return v;
    } catch (const std::invalid_argument& ex) {
      fail(ex.what());
    }
  }

  std::size_t count() const {
    const double v = number();
    if (v < 0.0 || v != std::floor(v) || v > 1e15) fail("expected a non-negative integer");
    return static_cast<std::size_t>(v);
  }

  std::uint64_t u64() const {
    std::uint64_t v = 0;
    const auto s = trim(e_.value);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) fail("expected an unsigned integer");
    return v;
  }

  bool boolean() const {
    const auto s = trim(e_.value);
    if (s == "true") return true;
    if (s == "false") return false;
    fail("expected true or false");
  }

  std::string word() const {
    const auto s = trim(e_.value);
    if (s.empty()) fail("empty value");
    return std::string(s);
  }

  std::vector<double> list() const {
    auto s = trim(e_.value);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail("expected a list like [a, b, c]");
    s = trim(s.substr(1, s.size() - 2));
    std::vector<double> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    for (;;) {
      const auto comma = s.find(',', start);
      const auto item = trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
      if (item.empty()) fail("empty list element");
      try {
        const double v = evaluate_expression(item, lambda_);
        if (!std::isfinite(v)) fail("list element is not finite");
        out.push_back(v);
      } catch (const std::invalid_argument& ex) {
        fail(ex.what());
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  }

 private:
  const std::string& key_;
  const Entry& e_;
  double lambda_;
};

using Setter = std::function<void(Scenario&, const Reader&)>;

void add_optimizer_keys(std::map<std::string, Setter>& t, const std::string& prefix,
                        OptimizerConfig AoConfig::*member) {
  t[prefix + ".max_iterations"] = [member](Scenario& s, const Reader& r) { (s.ao.*member).max_iterations = r.count(); };
  t[prefix + ".step"] = [member](Scenario& s, const Reader& r) { (s.ao.*member).step = r.number(); };
  t[prefix + ".momentum"] = [member](Scenario& s, const Reader& r) { (s.ao.*member).momentum = r.number(); };
  t[prefix + ".up_factor"] = [member](Scenario& s, const Reader& r) { (s.ao.*member).up_factor = r.number(); };
  t[prefix + ".down_factor"] = [member](Scenario& s, const Reader& r) { (s.ao.*member).down_factor = r.number(); };
  t[prefix + ".velocity_damp"] = [member](Scenario& s, const Reader& r) { (s.ao.*member).velocity_damp = r.number(); };
  t[prefix + ".velocity_decay"] = [member](Scenario& s, const Reader& r) { (s.ao.*member).velocity_decay = r.number(); };
  t[prefix + ".momentum_cap"] = [member](Scenario& s, const Reader& r) { (s.ao.*member).momentum_cap = r.number(); };
  t[prefix + ".window"] = [member](Scenario& s, const Reader& r) { (s.ao.*member).window = r.count(); };
  t[prefix + ".rate_tol"] = [member](Scenario& s, const Reader& r) { (s.ao.*member).rate_tol = r.number(); };
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> t;
    t["name"] = [](Scenario& s, const Reader& r) { s.name = r.word(); };
    t["slots"] = [](Scenario& s, const Reader& r) { s.slots = r.count(); };
    t["n"] = [](Scenario& s, const Reader& r) { s.n = r.count(); };
    t["eves"] = [](Scenario& s, const Reader& r) { s.eves = r.count(); };
    t["p_fpa"] = [](Scenario& s, const Reader& r) { s.p_fpa = r.number(); };
    t["p_ma"] = [](Scenario& s, const Reader& r) { s.p_ma = r.number(); };
    t["wavelength"] = [](Scenario& s, const Reader& r) { s.wavelength = r.number(); };
    t["noise_power"] = [](Scenario& s, const Reader& r) { s.noise_power = r.number(); };
    t["d_min"] = [](Scenario& s, const Reader& r) { s.d_min = r.number(); };
    t["range_max"] = [](Scenario& s, const Reader& r) { s.range_max = r.number(); };
    t["path_loss_exponent"] = [](Scenario& s, const Reader& r) { s.path_loss_exponent = r.number(); };
    t["distance"] = [](Scenario& s, const Reader& r) { s.distance = r.number(); };
    t["reference_loss"] = [](Scenario& s, const Reader& r) { s.reference_loss = r.number(); };
    t["path_loss_enabled"] = [](Scenario& s, const Reader& r) { s.path_loss_enabled = r.boolean(); };
    t["theta_bob"] = [](Scenario& s, const Reader& r) { s.theta_bob = r.list(); };
    t["warm_start"] = [](Scenario& s, const Reader& r) { s.warm_start = r.boolean(); };
    t["seed"] = [](Scenario& s, const Reader& r) { s.seed = r.u64(); };
    t["pattern_samples"] = [](Scenario& s, const Reader& r) { s.pattern_samples = r.count(); };

    t["ao.max_iterations"] = [](Scenario& s, const Reader& r) { s.ao.max_iterations = r.count(); };
    t["ao.rate_tol"] = [](Scenario& s, const Reader& r) { s.ao.rate_tol = r.number(); };
    t["ao.stagnation_limit"] = [](Scenario& s, const Reader& r) { s.ao.stagnation_limit = r.count(); };
    t["ao.stagnation_enabled"] = [](Scenario& s, const Reader& r) { s.ao.stagnation_enabled = r.boolean(); };
    t["ao.position_optimizer"] = [](Scenario& s, const Reader& r) {
      try {
        s.ao.position_method = parse_position_method(r.word());
      } catch (const std::invalid_argument& ex) {
        r.fail(ex.what());
      }
    };
    t["ao.position_restarts"] = [](Scenario& s, const Reader& r) { s.ao.position_restarts = r.count(); };
    t["ao.update_w_fpa"] = [](Scenario& s, const Reader& r) { s.ao.update_w_fpa = r.boolean(); };
    t["ao.update_positions"] = [](Scenario& s, const Reader& r) { s.ao.update_positions = r.boolean(); };
    t["ao.update_w_ma"] = [](Scenario& s, const Reader& r) { s.ao.update_w_ma = r.boolean(); };
    add_optimizer_keys(t, "nmpga", &AoConfig::nmpga);
    add_optimizer_keys(t, "pga", &AoConfig::pga);
    t["ma_only.mode"] = [](Scenario& s, const Reader& r) {
      try {
        s.ao.ma_only_mode = parse_ma_only_mode(r.word());
      } catch (const std::invalid_argument& ex) {
        r.fail(ex.what());
      }
    };
    t["ma_only.optimizer"] = [](Scenario& s, const Reader& r) {
      try {
        s.ao.ma_only_method = parse_position_method(r.word());
      } catch (const std::invalid_argument& ex) {
        r.fail(ex.what());
      }
    };
    t["sweep.noise"] = [](Scenario& s, const Reader& r) { s.sweep.noise_powers = r.list(); };
    t["sweep.alpha"] = [](Scenario& s, const Reader& r) { s.sweep.path_loss_exponents = r.list(); };
    t["sweep.bob_angle"] = [](Scenario& s, const Reader& r) { s.sweep.bob_angles = r.list(); };
    t["sweep.angle_slot"] = [](Scenario& s, const Reader& r) { s.sweep.angle_slot = r.count(); };
    return t;
  }();
  return table;
}

// theta_eve<k>, k >= 1; returns 0 when the key is not of that form.
std::size_t eve_key_index(std::string_view key) {
  constexpr std::string_view prefix = "theta_eve";
  if (key.substr(0, prefix.size()) != prefix || key.size() == prefix.size()) return 0;
  std::size_t k = 0;
  const auto digits = key.substr(prefix.size());
  const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (res.ec != std::errc() || res.ptr != digits.data() + digits.size()) return 0;
  return k;
}

void check_angles(const std::vector<double>& angles, const std::string& field, const std::string& who) {
  for (std::size_t t = 0; t < angles.size(); ++t) {
    const double a = angles[t];
    if (!std::isfinite(a) || a < 0.0 || a >= kPi)
      throw ScenarioError(0, field,
                          "field '" + field + "': slot " + std::to_string(t + 1) + ", " + who + " angle " +
                              fmt_g(a, 12) + " rad outside [0, pi)");
  }
}

void require(bool ok, const std::string& field, const std::string& msg) {
  if (!ok) throw ScenarioError(0, field, "field '" + field + "': " + msg);
}

}  // namespace

double evaluate_expression(std::string_view expr, double wavelength) {
  return ExprParser(trim(expr), wavelength).parse();
}

std::uint64_t sub_seed(std::uint64_t root, std::string_view name) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  std::uint64_t z = root ^ h;  // splitmix64 finalizer
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void Scenario::validate() const {
  require(slots >= 1, "slots", "must be >= 1");
  require(n >= 1, "n", "must be >= 1");
  require(eves >= 1, "eves", "must be >= 1");
  require(p_fpa > 0.0, "p_fpa", "must be > 0");
  require(p_ma > 0.0, "p_ma", "must be > 0");
  require(wavelength > 0.0, "wavelength", "must be > 0");
  require(noise_power > 0.0, "noise_power", "must be > 0");
  require(d_min > 0.0, "d_min", "must be > 0");
  require(range_max > 0.0, "range_max", "must be > 0");
  require(distance > 0.0, "distance", "must be > 0");
  require(path_loss_exponent >= 0.0, "path_loss_exponent", "must be >= 0");
  require(pattern_samples >= 2, "pattern_samples", "must be >= 2");
  try {
    check_array_feasible(n, d_min, range_max);
  } catch (const GeometryError& ex) {
    throw ScenarioError(0, "range_max", std::string("field 'range_max': ") + ex.what());
  }
  require(theta_bob.size() == slots, "theta_bob",
          "has " + std::to_string(theta_bob.size()) + " entries, expected " + std::to_string(slots));
  check_angles(theta_bob, "theta_bob", "Bob");
  require(theta_eve.size() == eves, "theta_eve",
          std::to_string(theta_eve.size()) + " Eve schedules given, expected " + std::to_string(eves));
  for (std::size_t i = 0; i < theta_eve.size(); ++i) {
    const auto field = "theta_eve" + std::to_string(i + 1);
    require(theta_eve[i].size() == slots, field,
            "has " + std::to_string(theta_eve[i].size()) + " entries, expected " + std::to_string(slots));
    check_angles(theta_eve[i], field, "Eve " + std::to_string(i + 1));
  }
  for (double v : sweep.noise_powers) require(v > 0.0, "sweep.noise", "noise powers must be > 0");
  for (double v : sweep.path_loss_exponents) require(v >= 0.0, "sweep.alpha", "exponents must be >= 0");
  check_angles(sweep.bob_angles, "sweep.bob_angle", "Bob");
  require(sweep.angle_slot >= 1 && sweep.angle_slot <= slots, "sweep.angle_slot", "must lie in 1..slots");
  try {
    ao.validate();
  } catch (const std::invalid_argument& ex) {
    throw ScenarioError(0, "ao", std::string("AO settings: ") + ex.what());
  }
}

LinkGeometry Scenario::link(double angle) const {
  LinkGeometry l;
  l.angle = angle;
  l.distance = distance;
  l.path_loss_exponent = path_loss_exponent;
  l.reference_loss = reference_loss;
  l.wavelength = wavelength;
  l.path_loss_enabled = path_loss_enabled;
  return l;
}

SlotProblem Scenario::slot_problem(std::size_t t) const {
  if (t >= slots) throw std::out_of_range("slot index " + std::to_string(t) + " out of range");
  SlotProblem p;
  p.bob = link(theta_bob[t]);
  for (const auto& sched : theta_eve) p.eves.push_back(link(sched[t]));
  p.noise_power = noise_power;
  p.n = n;
  p.p_fpa = p_fpa;
  p.p_ma = p_ma;
  p.d_min = d_min;
  p.range_max = range_max;
  return p;
}

std::vector<SlotProblem> Scenario::slot_problems() const {
  std::vector<SlotProblem> out;
  for (std::size_t t = 0; t < slots; ++t) out.push_back(slot_problem(t));
  return out;
}

Scenario reference_scenario() {
  Scenario s;
  s.name = "paper_table2";
  s.slots = 4;
  s.n = 5;
  s.eves = 2;
  s.p_fpa = 5.0;
  s.p_ma = 1.0;
  s.wavelength = 0.0508;
  s.noise_power = 1e-8;
  s.d_min = s.wavelength / 2;
  s.range_max = 10 * s.wavelength;
  s.path_loss_exponent = 2.0;
  s.distance = 100.0;
  s.path_loss_enabled = false;
  s.theta_bob = {kPi / 3, 4 * kPi / 9, 5 * kPi / 9, 2 * kPi / 3};
  s.theta_eve = {{kPi / 9, 2 * kPi / 9, kPi / 3, 4 * kPi / 9}, {8 * kPi / 9, 7 * kPi / 9, 2 * kPi / 3, 5 * kPi / 9}};
  s.seed = 2025;
  for (int k = 1; k <= 10; ++k) s.sweep.noise_powers.push_back(k * 1e-7);
  s.sweep.path_loss_exponents = {1.5, 1.75, 2.0, 2.25, 2.5, 2.75, 3.0};
  for (int k = 1; k <= 17; ++k) s.sweep.bob_angles.push_back(k * kPi / 18);
  return s;
}

Scenario parse_scenario(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ScenarioError(line_no, "", "line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw ScenarioError(line_no, "", "line " + std::to_string(line_no) + ": missing key");
    if (entries.contains(key))
      throw ScenarioError(line_no, key, "line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    entries[key] = {line_no, std::string(trim(line.substr(eq + 1)))};
  }
  if (entries.empty()) throw ScenarioError(0, "", "parse error at position 0: scenario is empty");

  Scenario s;
  s.sweep = {};
  s.theta_eve.clear();
  if (const auto it = entries.find("wavelength"); it != entries.end())
    s.wavelength = Reader(it->first, it->second, 0.0).number();

  std::map<std::size_t, std::pair<std::size_t, std::vector<double>>> eve_lists;
  const auto& table = setters();
  for (const auto& [key, e] : entries) {
    const Reader r(key, e, s.wavelength);
    if (const auto k = eve_key_index(key); k > 0) {
      eve_lists[k] = {e.line, r.list()};
      continue;
    }
    const auto it = table.find(key);
    if (it == table.end()) r.fail("unknown key '" + key + "'");
    it->second(s, r);
  }
  std::size_t expect = 1;
  for (auto& [k, v] : eve_lists) {
    if (k != expect)
      throw ScenarioError(v.first, "theta_eve" + std::to_string(k),
                          "line " + std::to_string(v.first) + ": Eve schedules must be numbered 1.." +
                              std::to_string(eve_lists.size()) + " without gaps");
    s.theta_eve.push_back(std::move(v.second));
    ++expect;
  }
  s.validate();
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError(0, "", "cannot open scenario file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string format_scenario(const Scenario& s) {
  std::ostringstream o;
  auto list = [](const std::vector<double>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + fmt_g(v[i]);
    return out + "]";
  };
  auto b = [](bool v) { return v ? "true" : "false"; };
  o << "name = " << s.name << "\n"
    << "slots = " << s.slots << "\n"
    << "n = " << s.n << "\n"
    << "eves = " << s.eves << "\n"
    << "p_fpa = " << fmt_g(s.p_fpa) << "\n"
    << "p_ma = " << fmt_g(s.p_ma) << "\n"
    << "wavelength = " << fmt_g(s.wavelength) << "\n"
    << "noise_power = " << fmt_g(s.noise_power) << "\n"
    << "d_min = " << fmt_g(s.d_min) << "\n"
    << "range_max = " << fmt_g(s.range_max) << "\n"
    << "path_loss_exponent = " << fmt_g(s.path_loss_exponent) << "\n"
    << "distance = " << fmt_g(s.distance) << "\n"
    << "reference_loss = " << fmt_g(s.reference_loss) << "\n"
    << "path_loss_enabled = " << b(s.path_loss_enabled) << "\n"
    << "theta_bob = " << list(s.theta_bob) << "\n";
  for (std::size_t i = 0; i < s.theta_eve.size(); ++i)
    o << "theta_eve" << i + 1 << " = " << list(s.theta_eve[i]) << "\n";
  o << "warm_start = " << b(s.warm_start) << "\n"
    << "seed = " << s.seed << "\n"
    << "pattern_samples = " << s.pattern_samples << "\n"
    << "ao.max_iterations = " << s.ao.max_iterations << "\n"
    << "ao.rate_tol = " << fmt_g(s.ao.rate_tol) << "\n"
    << "ao.stagnation_limit = " << s.ao.stagnation_limit << "\n"
    << "ao.stagnation_enabled = " << b(s.ao.stagnation_enabled) << "\n"
    << "ao.position_optimizer = " << position_method_name(s.ao.position_method) << "\n"
    << "ao.position_restarts = " << s.ao.position_restarts << "\n"
    << "ao.update_w_fpa = " << b(s.ao.update_w_fpa) << "\n"
    << "ao.update_positions = " << b(s.ao.update_positions) << "\n"
    << "ao.update_w_ma = " << b(s.ao.update_w_ma) << "\n";
  for (const auto& [prefix, oc] : {std::pair<const char*, const OptimizerConfig*>{"nmpga", &s.ao.nmpga},
                                   std::pair<const char*, const OptimizerConfig*>{"pga", &s.ao.pga}}) {
    o << prefix << ".max_iterations = " << oc->max_iterations << "\n"
      << prefix << ".step = " << fmt_g(oc->step) << "\n"
      << prefix << ".momentum = " << fmt_g(oc->momentum) << "\n"
      << prefix << ".up_factor = " << fmt_g(oc->up_factor) << "\n"
      << prefix << ".down_factor = " << fmt_g(oc->down_factor) << "\n"
      << prefix << ".velocity_damp = " << fmt_g(oc->velocity_damp) << "\n"
      << prefix << ".velocity_decay = " << fmt_g(oc->velocity_decay) << "\n"
      << prefix << ".momentum_cap = " << fmt_g(oc->momentum_cap) << "\n"
      << prefix << ".window = " << oc->window << "\n"
      << prefix << ".rate_tol = " << fmt_g(oc->rate_tol) << "\n";
  }
  o << "ma_only.mode = " << ma_only_mode_name(s.ao.ma_only_mode) << "\n"
    << "ma_only.optimizer = " << position_method_name(s.ao.ma_only_method) << "\n"
    << "sweep.noise = " << list(s.sweep.noise_powers) << "\n"
    << "sweep.alpha = " << list(s.sweep.path_loss_exponents) << "\n"
    << "sweep.bob_angle = " << list(s.sweep.bob_angles) << "\n"
    << "sweep.angle_slot = " << s.sweep.angle_slot << "\n";
  return o.str();
}

}  // namespace fmasec
