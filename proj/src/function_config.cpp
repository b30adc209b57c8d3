#include "basindim/function_config.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace basindim {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double to_double(std::string_view text, std::string_view key) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad number for key '" + std::string(key) + "': '" + std::string(text) + "'");
  }
  return v;
}

const std::map<std::string, std::set<std::string>, std::less<>>& family_keys() {
  static const std::map<std::string, std::set<std::string>, std::less<>> keys{
      {"exp_lambda", {"lambda_re", "lambda_im"}},
      {"erf_scaled", {"lambda_re", "lambda_im"}},
      {"cosine", {"a_re", "a_im", "b_re", "b_im"}},
      {"pexpq", {"p", "q", "c_re", "c_im"}},
  };
  return keys;
}

}  // namespace

Polynomial parse_coefficient_list(std::string_view text) {
  std::vector<Complex> coefficients;
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty coefficient list");
  while (true) {
    const std::size_t comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("coefficient '" + std::string(item) + "' is not a re:im pair");
    }
    coefficients.emplace_back(to_double(item.substr(0, colon), "coefficient"),
                              to_double(item.substr(colon + 1), "coefficient"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Polynomial(std::move(coefficients));
}

std::string format_coefficient_list(const Polynomial& p) {
  std::string out;
  for (const Complex c : p.coefficients()) {
    if (!out.empty()) out += ',';
    out += format_double(c.real());
    out += ':';
    out += format_double(c.imag());
  }
  return out;
}

FunctionSpec parse_function_config(std::istream& in) {
  std::map<std::string, std::string, std::less<>> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const std::size_t eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key(trim(view.substr(0, eq)));
    if (values.contains(key)) throw std::invalid_argument("duplicate key '" + key + "'");
    values.emplace(key, std::string(trim(view.substr(eq + 1))));
  }

  const auto fam = values.find("family");
  if (fam == values.end()) throw std::invalid_argument("function config is missing 'family'");
  const std::string family = fam->second;
  const auto allowed = family_keys().find(family);
  if (allowed == family_keys().end()) throw std::invalid_argument("unknown family '" + family + "'");
  for (const auto& [key, value] : values) {
    if (key != "family" && !allowed->second.contains(key)) {
      throw std::invalid_argument("unknown key '" + key + "' for family " + family);
    }
  }

  auto component = [&](const std::string& key, bool required) {
    const auto it = values.find(key);
    if (it == values.end()) {
      if (required) throw std::invalid_argument("missing key '" + key + "'");
      return 0.0;
    }
    return to_double(it->second, key);
  };
  auto complex_value = [&](const std::string& stem, bool required) {
    return Complex{component(stem + "_re", required), component(stem + "_im", false)};
  };

  if (family == "exp_lambda") return FunctionSpec::exp_lambda(complex_value("lambda", true));
  if (family == "erf_scaled") return FunctionSpec::erf_scaled(complex_value("lambda", true));
  if (family == "cosine") return FunctionSpec::cosine(complex_value("a", true), complex_value("b", true));

  const auto p = values.find("p");
  const auto q = values.find("q");
  if (p == values.end() || q == values.end()) throw std::invalid_argument("pexpq requires both 'p' and 'q'");
  return FunctionSpec::pexpq(parse_coefficient_list(p->second), parse_coefficient_list(q->second),
                             complex_value("c", false));
}

FunctionSpec parse_function_config_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_function_config(in);
}

std::string serialize_function_config(const FunctionSpec& f) {
  std::ostringstream out;
  out << "family=" << f.family() << '\n';
  auto emit = [&](const char* stem, Complex v) {
    out << stem << "_re=" << format_double(v.real()) << '\n';
    out << stem << "_im=" << format_double(v.imag()) << '\n';
  };
  if (const auto* e = std::get_if<ExpLambda>(&f.variant())) emit("lambda", e->lambda);
  if (const auto* e = std::get_if<ErfScaled>(&f.variant())) emit("lambda", e->lambda);
  if (const auto* c = std::get_if<Cosine>(&f.variant())) {
    emit("a", c->a);
    emit("b", c->b);
  }
  if (const auto* g = std::get_if<PExpQ>(&f.variant())) {
    out << "p=" << format_coefficient_list(g->p) << '\n';
    out << "q=" << format_coefficient_list(g->q) << '\n';
    emit("c", g->c);
  }
  return out.str();
}

}  // namespace basindim
