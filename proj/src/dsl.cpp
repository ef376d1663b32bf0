#include "hhlie/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "hhlie/errors.hpp"

namespace hhlie {

namespace {

using Poly = std::vector<PathTerm>;  // first-appearance order, like terms combined

void add_term(Poly& p, const Scalar& c, const std::vector<std::string>& path) {
  for (auto it = p.begin(); it != p.end(); ++it) {
    if (it->path != path) continue;
    it->coefficient += c;
    if (it->coefficient == 0) p.erase(it);
    return;
  }
  if (c != 0) p.push_back(PathTerm{c, path});
}

Poly times(const Poly& x, const Poly& y) {
  Poly out;
  for (const auto& s : x)
    for (const auto& t : y) {
      std::vector<std::string> path = s.path;
      path.insert(path.end(), t.path.begin(), t.path.end());
      add_term(out, s.coefficient * t.coefficient, path);
    }
  return out;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// Recursive descent over one relation line.
//   expr   := [+|-] term { (+|-) term }
//   term   := factor { '*' factor }
//   factor := integer [ '/' integer ] | arrow [ '^' integer ] | '(' expr ')'
class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t line, std::size_t column0)
      : s_(text), line_(line), col0_(column0) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col0_ + pos_, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly out;
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    while (true) {
      for (const auto& t : term()) add_term(out, negate ? Scalar(-t.coefficient) : t.coefficient, t.path);
      if (eat('+')) negate = false;
      else if (eat('-')) negate = true;
      else break;
    }
    return out;
  }

  Poly term() {
    Poly p = factor();
    while (eat('*')) p = times(p, factor());
    return p;
  }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  Poly factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of relation");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (eat('/')) {
        const std::size_t at = pos_;
        den = integer();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      mpq_class q(num, den);
      q.canonicalize();
      Poly p;
      add_term(p, q, {});
      return p;
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
      std::string label(s_.substr(start, pos_ - start));
      std::size_t power = 1;
      if (eat('^')) {
        mpz_class e = integer();
        if (e < 1 || e > 1024) fail("exponent out of range");
        power = e.get_ui();
      }
      Poly p;
      add_term(p, Scalar(1), std::vector<std::string>(power, label));
      return p;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_, col0_;
};

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> words(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

std::string render_scalar(const Scalar& s) { return s.get_str(); }

}  // namespace

Presentation parse_dsl(std::string_view text) {
  Presentation p;
  bool have_field = false;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto toks = words(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    if (kw == "field") {
      if (toks.size() != 2) throw ParseError(lineno, toks[0].column, "expected: field Q | fp:p");
      try {
        p.field = Field::parse(toks[1].text);
      } catch (const Error& e) {
        throw ParseError(lineno, toks[1].column, e.what());
      }
      have_field = true;
    } else if (kw == "vertex") {
      if (toks.size() < 2) throw ParseError(lineno, toks[0].column, "expected vertex names");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        try {
          p.quiver.add_vertex(toks[i].text);
        } catch (const Error& e) {
          throw ParseError(lineno, toks[i].column, e.what());
        }
      }
    } else if (kw == "arrow") {
      if (toks.size() != 4)
        throw ParseError(lineno, toks[0].column, "expected: arrow LABEL SOURCE TARGET");
      const std::string& label = toks[1].text;
      if (!is_ident_start(label[0]) ||
          !std::all_of(label.begin(), label.end(), is_ident_char))
        throw ParseError(lineno, toks[1].column, "arrow labels must be identifiers");
      auto src = p.quiver.vertex_index(toks[2].text);
      if (!src) throw ParseError(lineno, toks[2].column, "undeclared vertex '" + toks[2].text + "'");
      auto dst = p.quiver.vertex_index(toks[3].text);
      if (!dst) throw ParseError(lineno, toks[3].column, "undeclared vertex '" + toks[3].text + "'");
      try {
        p.quiver.add_arrow(label, *src, *dst);
      } catch (const Error& e) {
        throw ParseError(lineno, toks[1].column, e.what());
      }
    } else if (kw == "relation") {
      const std::size_t body = line.find("relation") + 8;
      Poly terms = ExprParser(line.substr(body), lineno, body + 1).parse();
      p.relations.push_back(Relation{std::move(terms)});
    } else {
      throw ParseError(lineno, toks[0].column, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_field) p.field = Field::rationals();
  return p;
}

std::string render_dsl(const Presentation& p) {
  std::ostringstream out;
  out << "field " << p.field.to_string() << "\n";
  if (p.quiver.num_vertices()) {
    out << "vertex";
    for (const auto& v : p.quiver.vertices()) out << ' ' << v;
    out << "\n";
  }
  for (const auto& a : p.quiver.arrows())
    out << "arrow " << a.label << ' ' << p.quiver.vertices()[a.source] << ' '
        << p.quiver.vertices()[a.target] << "\n";
  for (const auto& r : p.relations) {
    out << "relation";
    if (r.terms.empty()) out << " 0";
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
      const auto& t = r.terms[i];
      Scalar c = t.coefficient;
      if (c < 0) {
        out << " -";
        c = -c;
      } else if (i) {
        out << " +";
      }
      out << ' ';
      if (c != 1 || t.path.empty()) out << render_scalar(c) << (t.path.empty() ? "" : " * ");
      for (std::size_t k = 0; k < t.path.size(); ++k) out << (k ? "*" : "") << t.path[k];
    }
    out << "\n";
  }
  return out.str();
}

Presentation presentation_from_json(const nlohmann::json& j) {
  auto as_string = [](const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw Error(ErrorKind::invalid_input, "expected a string or an integer, got " + v.dump());
  };
  auto expect = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::invalid_input, std::string("malformed presentation: ") + what);
  };
  try {
    expect(j.is_object(), "expected an object");
    expect(j.contains("vertices") && j.at("vertices").is_array(), "vertices must be an array");
    expect(j.value("arrows", nlohmann::json::array()).is_array(), "arrows must be an array");
    expect(j.value("relations", nlohmann::json::array()).is_array(), "relations must be an array");
    Presentation p;
    p.field = j.contains("field") ? Field::parse(as_string(j.at("field"))) : Field::rationals();
    for (const auto& v : j.at("vertices")) p.quiver.add_vertex(as_string(v));
    for (const auto& a : j.value("arrows", nlohmann::json::array())) {
      expect(a.is_object(), "each arrow must be an object");
      const std::string src = as_string(a.at("src")), dst = as_string(a.at("dst"));
      auto s = p.quiver.vertex_index(src);
      auto t = p.quiver.vertex_index(dst);
      if (!s || !t) throw Error(ErrorKind::invalid_input, "arrow with undeclared endpoint");
      p.quiver.add_arrow(a.at("label").get<std::string>(), *s, *t);
    }
    for (const auto& r : j.value("relations", nlohmann::json::array())) {
      expect(r.is_array(), "each relation must be an array of terms");
      Poly terms;
      for (const auto& t : r) {
        expect(t.is_object(), "each term must be an object");
        Scalar c(1);
        if (t.contains("coef")) {
          const auto& cv = t.at("coef");
          c = cv.is_string() ? Scalar(cv.get<std::string>()) : Scalar(cv.get<long>());
          c.canonicalize();
        }
        add_term(terms, c, t.at("path").get<std::vector<std::string>>());
      }
      p.relations.push_back(Relation{std::move(terms)});
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::invalid_input, std::string("malformed presentation: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::invalid_input, "malformed coefficient");
  }
}

nlohmann::json presentation_to_json(const Presentation& p) {
  nlohmann::json j;
  j["field"] = p.field.to_string();
  j["vertices"] = p.quiver.vertices();
  j["arrows"] = nlohmann::json::array();
  for (const auto& a : p.quiver.arrows())
    j["arrows"].push_back({{"label", a.label},
                           {"src", p.quiver.vertices()[a.source]},
                           {"dst", p.quiver.vertices()[a.target]}});
  j["relations"] = nlohmann::json::array();
  for (const auto& r : p.relations) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : r.terms) terms.push_back({{"coef", render_scalar(t.coefficient)}, {"path", t.path}});
    j["relations"].push_back(std::move(terms));
  }
  return j;
}

Presentation parse_presentation(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(1, e.byte, e.what());
    }
    return presentation_from_json(j);
  }
  return parse_dsl(text);
}

Presentation load_presentation(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::invalid_input, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

}  // namespace hhlie
