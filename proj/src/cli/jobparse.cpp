/* Copyright (C) 2026 The ramlab Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include <cctype>
#include <set>
#include <sstream>

#include "ramlab/cli.hpp"
#include "ramlab/error.hpp"

namespace ramlab::cli {

namespace {

// parse failure at a byte offset inside one value
struct ExprError {
  std::size_t offset;
  std::string msg;
};

class ExprParser {
 public:
  ExprParser(const ModelPtr& m, std::string_view s, bool allow_x) : m_(m), s_(s), allow_x_(allow_x) {}

  Poly parse() {
    Poly r = sum();
    ws();
    if (i_ < s_.size()) err(i_, std::string("unexpected '") + s_[i_] + "'");
    return r;
  }

 private:
  [[noreturn]] void err(std::size_t at, const std::string& msg) { throw ExprError{at, msg}; }

  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  bool digit_next() const { return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])); }

  Integer integer() {
    ws();
    std::size_t at = i_;
    while (digit_next()) ++i_;
    if (at == i_) err(at, "expected a number");
    return Integer(std::string(s_.substr(at, i_ - at)));
  }

  // n, -n, n/d, -n/d or a parenthesized signed fraction
  Rational exponent() {
    ws();
    bool paren = eat('(');
    bool neg = eat('-');
    Rational q(integer());
    if (i_ + 1 < s_.size() && s_[i_] == '/' && std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
      ++i_;
      std::size_t at = i_;
      Integer d = integer();
      if (d == 0) err(at, "zero denominator");
      q /= Rational(d);
    }
    if (paren && !eat(')')) err(i_, "expected ')'");
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }

  unsigned long natural_exponent(std::size_t at) {
    Rational q = exponent();
    if (q.get_den() != 1 || q < 0 || q > 4096) err(at, "exponent must be an integer in [0, 4096]");
    return q.get_num().get_ui();
  }

  Poly constant(const Element& e) { return Poly::constant(e); }

  Poly sum() {
    ws();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Poly r = product();
    if (neg) r = -r;
    while (true) {
      if (eat('+')) r += product();
      else if (eat('-')) r -= product();
      else return r;
    }
  }

  Poly product() {
    Poly r = primary();
    while (eat('*')) r = r * primary();
    return r;
  }

  Poly primary() {
    ws();
    std::size_t at = i_;
    if (i_ >= s_.size()) err(at, "unexpected end of expression");
    if (eat('(')) {
      Poly r = sum();
      if (!eat(')')) err(i_, "expected ')'");
      if (eat('^')) r = r.pow(natural_exponent(at));
      return r;
    }
    if (digit_next()) {
      Rational q(integer());
      if (i_ + 1 < s_.size() && s_[i_] == '/' && std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
        ++i_;
        Integer d = integer();
        if (d == 0) err(at, "zero denominator");
        q /= Rational(d);
        q.canonicalize();
      }
      if (eat('^')) {
        Rational e = exponent();
        if (e.get_den() != 1) err(at, "numbers take integer exponents");
        long k = e.get_num().get_si();
        if (k < -4096 || k > 4096) err(at, "exponent out of range");
        Rational b = 1;
        for (long j = 0; j < (k < 0 ? -k : k); ++j) b *= q;
        if (k < 0) {
          if (b == 0) err(at, "zero to a negative power");
          b = 1 / b;
        }
        q = b;
      }
      return constant(Element::from_rational(m_, q));
    }
    if (!std::isalpha(static_cast<unsigned char>(s_[i_]))) err(at, std::string("unexpected '") + s_[i_] + "'");
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::string name(s_.substr(at, i_ - at));
    bool has_exp = eat('^');
    auto kind = m_->kind();
    if (name == "x" || name == "X") {
      if (!allow_x_) err(at, "the variable is not allowed here");
      return Poly::variable(m_).pow(has_exp ? natural_exponent(at) : 1);
    }
    if (name == "t" || name == "u") {
      Rational q = has_exp ? exponent() : Rational(1);
      if (kind == ModelKind::Padic) err(at, "'" + name + "' is not an atom of p-adic models");
      if (name == "u" && kind != ModelKind::IteratedSeries) err(at, "'u' needs an iterated model");
      Value v = kind == ModelKind::Series ? Value(q) : name == "t" ? Value(q, Rational(0)) : Value(Rational(0), q);
      return constant(Element::monomial(m_, 1, v));
    }
    if (name == "pi") {
      if (kind != ModelKind::Padic) err(at, "'pi' needs a p-adic model");
      Rational q = has_exp ? exponent() : Rational(1);
      if (q.get_den() != 1) err(at, "pi takes integer exponents");
      long k = q.get_num().get_si();
      if (k < -64 || k > 4096) err(at, "exponent out of range");
      Element u = Element::uniformizer(m_);
      if (k < 0) return constant(u.inverse().pow(static_cast<unsigned long>(-k)));
      return constant(u.pow(static_cast<unsigned long>(k)));
    }
    if (name == "a") {
      Element g = Element::lift_residue(m_, m_->residue_field()->generator());
      return constant(has_exp ? g.pow(natural_exponent(at)) : g);
    }
    err(at, "unknown symbol '" + name + "'");
  }

  const ModelPtr& m_;
  std::string_view s_;
  bool allow_x_;
  std::size_t i_ = 0;
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// `p^k` for p-adics, otherwise the value syntax
Value parse_precision(const ModelPtr& m, const std::string& text) {
  std::string s = trim(text);
  auto caret = s.find('^');
  if (caret != std::string::npos && m->kind() == ModelKind::Padic) {
    Rational base = parse_rational(trim(s.substr(0, caret)));
    if (base != m->p()) fail(ErrorCode::Parse, "precision base must be p = " + std::to_string(m->p()));
    return Value(parse_rational(trim(s.substr(caret + 1))));
  }
  return Value::parse(s);
}

struct Split {
  std::string body;
  std::optional<std::string> prec;
  std::size_t prec_offset = 0;
};

Split split_prec(const std::string& text) {
  auto at = text.find("@prec");
  if (at == std::string::npos) return {text, std::nullopt, 0};
  return {text.substr(0, at), text.substr(at + 5), at + 5};
}

Poly parse_poly_raw(const ModelPtr& m, const std::string& text, bool allow_x) {
  auto sp = split_prec(text);
  Poly r = ExprParser(m, sp.body, allow_x).parse();
  if (sp.prec) {
    Value v;
    try {
      v = parse_precision(m, *sp.prec);
    } catch (const Error& e) {
      throw ExprError{sp.prec_offset, e.what()};
    }
    r = r.truncated(v);
  }
  return r;
}

Element parse_element_raw(const ModelPtr& m, const std::string& text) {
  auto sp = split_prec(text);
  Poly r = ExprParser(m, sp.body, false).parse();
  Element e = r.coeff(0);
  if (sp.prec) {
    try {
      e = e.truncated(parse_precision(m, *sp.prec));
    } catch (const Error& ex) {
      throw ExprError{sp.prec_offset, ex.what()};
    }
  }
  return e;
}

std::string expr_message(const std::string& text, const ExprError& e) {
  return "column " + std::to_string(e.offset + 1) + " of '" + text + "': " + e.msg;
}

ordval::GroupCoordinate coordinate(const std::string& s, long p) {
  if (s == "Z") return {ordval::Divisibility::Integers, 0, 1};
  if (s == "Z[1/p]") return {ordval::Divisibility::PDivisible, p, 1};
  if (s == "Q") return {ordval::Divisibility::Rationals, 0, 1};
  fail(ErrorCode::Parse, "group must be Z, Z[1/p] or Q");
}

long parse_long(const std::string& s, long lo, long hi) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    fail(ErrorCode::Parse, "expected an integer");
  }
  if (used != s.size()) fail(ErrorCode::Parse, "expected an integer");
  if (v < lo || v > hi) fail(ErrorCode::Parse, "integer out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

bool parse_bool(const std::string& s) {
  if (s == "true" || s == "yes") return true;
  if (s == "false" || s == "no") return false;
  fail(ErrorCode::Parse, "expected true or false");
}

void require_positive(const Value& v) {
  if (v.is_infinite()) return;
  Value zero = v.rank() == 1 ? Value(Rational(0)) : Value(Rational(0), Rational(0));
  if (!(v > zero)) fail(ErrorCode::Parse, "precision must be positive");
}

const std::map<std::string, std::set<std::string>> kBlockKeys = {
    {"model", {"kind", "p", "k", "group", "eisenstein", "t_group", "u_group"}},
    {"stream", {"kind", "terms", "ambient", "approximant"}},
    {"task", {"kind", "f", "h", "minpoly", "prec", "confirmations", "p", "vp", "entries", "declared_e", "declared_f",
              "residue_separable", "eta", "suite", "seed", "size"}},
};

const std::map<std::string, std::set<std::string>> kTaskKeys = {
    {"nf-as", {"f", "prec", "confirmations"}},
    {"nf-kummer", {"f", "prec", "confirmations"}},
    {"nf-kummer-sim", {"p", "vp", "entries"}},
    {"ext-invariants", {"minpoly", "declared_e", "declared_f", "residue_separable"}},
    {"hensel", {"h", "eta", "prec"}},
    {"verify", {"suite", "seed", "size"}},
};

// an already positioned message; passes through `guarded` untouched
struct Located {
  std::string msg;
};

class JobBuilder {
 public:
  explicit JobBuilder(std::string name) : name_(std::move(name)) {}

  [[noreturn]] void at(int line, int col, const std::string& msg) const {
    throw Located{name_ + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg};
  }

  // runs `f`, pinning any failure to the setting's value
  template <class F>
  auto guarded(const Setting& s, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const ExprError& e) {
      at(s.line, s.column + static_cast<int>(e.offset), s.key + ": " + e.msg);
    } catch (const Error& e) {
      at(s.line, s.column, s.key + ": " + e.what());
    }
  }

  Job build(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    std::string block;
    std::vector<std::pair<std::string, int>> order;
    std::map<std::string, std::vector<Setting>> blocks;
    while (std::getline(in, raw)) {
      ++line;
      auto hash = raw.find('#');
      std::string s = raw.substr(0, hash);
      std::string t = trim(s);
      if (t.empty()) continue;
      int col = static_cast<int>(s.find_first_not_of(" \t")) + 1;
      if (t.front() == '[') {
        if (t.back() != ']') at(line, col, "unterminated block header");
        block = trim(t.substr(1, t.size() - 2));
        if (!kBlockKeys.count(block)) at(line, col + 1, "unknown block [" + block + "] (model, stream, task)");
        if (blocks.count(block)) at(line, col, "block [" + block + "] appears twice");
        blocks[block];
        order.emplace_back(block, line);
        continue;
      }
      if (block.empty()) at(line, col, "setting outside a block");
      auto eq = s.find('=');
      if (eq == std::string::npos) at(line, col, "expected 'key = value'");
      std::string key = trim(s.substr(0, eq));
      if (key.empty()) at(line, col, "missing key");
      if (!kBlockKeys.at(block).count(key)) at(line, col, "unknown key '" + key + "' in [" + block + "]");
      auto vstart = s.find_first_not_of(" \t", eq + 1);
      if (vstart == std::string::npos) at(line, static_cast<int>(eq) + 2, "missing value for '" + key + "'");
      std::string value = trim(s.substr(vstart));
      auto& list = blocks[block];
      if (key != "approximant")
        for (const auto& o : list)
          if (o.key == key) at(line, col, "'" + key + "' set twice (first on line " + std::to_string(o.line) + ")");
      list.push_back({key, value, line, static_cast<int>(vstart) + 1});
    }
    if (!blocks.count("task")) at(line + 1, 1, "missing [task] block");

    Job job;
    job.blocks = blocks;
    for (const auto& [name, hline] : order) {
      if (name == "model") model(job, blocks[name]);
      else if (name == "stream") {
        if (!job.model) at(hline, 1, "[stream] needs a [model] block before it");
        stream(job, blocks[name], hline);
      } else task(job, blocks[name], hline);
    }
    return job;
  }

 private:
  static const Setting* find(const std::vector<Setting>& b, const std::string& key) {
    for (const auto& s : b)
      if (s.key == key) return &s;
    return nullptr;
  }

  const Setting& need(const std::vector<Setting>& b, const std::string& key, int hline, const std::string& block) {
    auto s = find(b, key);
    if (!s) at(hline, 1, "[" + block + "] needs '" + key + "'");
    return *s;
  }

  void model(Job& job, const std::vector<Setting>& b) {
    int hline = b.empty() ? 1 : b.front().line - 1;
    const auto& kind = need(b, "kind", hline, "model");
    long p = guarded(need(b, "p", hline, "model"), [&] { return parse_long(need(b, "p", hline, "model").value, 2, 997); });
    long k = 1;
    if (auto s = find(b, "k")) k = guarded(*s, [&] { return parse_long(s->value, 1, 16); });
    auto only = [&](std::set<std::string> allowed) {
      for (const auto& s : b)
        if (s.key != "kind" && s.key != "p" && !allowed.count(s.key))
          at(s.line, 1, "'" + s.key + "' does not apply to " + kind.value + " models");
    };
    guarded(kind, [&] {
      if (kind.value == "perfect-hull") {
        only({"k"});
        job.model = FieldModel::perfect_hull(p, static_cast<int>(k));
      } else if (kind.value == "series") {
        only({"k", "group"});
        ordval::GroupDescriptor g = ordval::GroupDescriptor::integers();
        if (auto s = find(b, "group"))
          g = guarded(*s, [&] {
            auto c = coordinate(s->value, p);
            ordval::GroupDescriptor d;
            d.coords[0] = c;
            return d;
          });
        job.model = FieldModel::series(p, static_cast<int>(k), g);
      } else if (kind.value == "padic") {
        only({"eisenstein"});
        std::vector<Integer> eis;
        if (auto s = find(b, "eisenstein"))
          guarded(*s, [&] {
            std::istringstream cs(s->value);
            std::string item;
            while (std::getline(cs, item, ',')) eis.emplace_back(parse_long(trim(item), -1000000, 1000000));
            return 0;
          });
        job.model = FieldModel::padic(p, eis);
      } else if (kind.value == "iterated") {
        only({"k", "t_group", "u_group"});
        auto coord_of = [&](const char* key) {
          auto s = find(b, key);
          if (!s) return coordinate("Z", p);
          return guarded(*s, [&] { return coordinate(s->value, p); });
        };
        job.model = FieldModel::iterated(p, static_cast<int>(k), coord_of("t_group"), coord_of("u_group"));
      } else {
        fail(ErrorCode::Parse, "model kind must be perfect-hull, series, padic or iterated");
      }
      return 0;
    });
  }

  void stream(Job& job, const std::vector<Setting>& b, int hline) {
    StreamSpec st;
    const auto& kind = need(b, "kind", hline, "stream");
    st.kind = kind.value;
    for (const auto& s : b) {
      if (s.key == "kind") continue;
      bool fits = (s.key == "terms" && st.kind == "xi") || (s.key == "ambient" && st.kind == "ambient") ||
                  (s.key == "approximant" && st.kind == "explicit");
      if (!fits) at(s.line, 1, "'" + s.key + "' does not apply to a " + st.kind + " stream");
    }
    if (st.kind == "xi") {
      if (auto s = find(b, "terms")) st.terms = guarded(*s, [&] { return parse_long(s->value, 2, 200); });
      auto ref = xi_stream(job.model->p(), 2);
      if (!same_model(ref.model(), job.model))
        at(kind.line, kind.column, "the default xi stream lives in the perfect hull of F_" + std::to_string(job.model->p()));
    } else if (st.kind == "ambient") {
      const auto& s = need(b, "ambient", hline, "stream");
      st.ambient = guarded(s, [&] { return parse_element_raw(job.model, s.value); });
      if (st.ambient->is_exact()) at(s.line, s.column, "ambient element needs a finite '@prec'");
    } else if (st.kind == "explicit") {
      for (const auto& s : b) {
        if (s.key != "approximant") continue;
        auto semi = s.value.find(';');
        if (semi == std::string::npos) at(s.line, s.column, "approximant needs 'element ; value'");
        Element c = guarded(s, [&] { return parse_element_raw(job.model, s.value.substr(0, semi)); });
        Setting vs = s;
        vs.column += static_cast<int>(semi) + 1;
        Value g = guarded(vs, [&] { return Value::parse(s.value.substr(semi + 1)); });
        st.approximants.push_back({c, g});
      }
      if (st.approximants.empty()) at(hline, 1, "explicit stream needs at least one approximant");
    } else {
      at(kind.line, kind.column, "stream kind must be xi, ambient or explicit");
    }
    job.stream = std::move(st);
  }

  void task(Job& job, const std::vector<Setting>& b, int hline) {
    const auto& kind = need(b, "kind", hline, "task");
    auto allowed = kTaskKeys.find(kind.value);
    if (allowed == kTaskKeys.end())
      at(kind.line, kind.column, "unknown task '" + kind.value + "' (nf-as, nf-kummer, nf-kummer-sim, ext-invariants, hensel, verify)");
    job.task = kind.value;
    for (const auto& s : b)
      if (s.key != "kind" && !allowed->second.count(s.key))
        at(s.line, 1, "'" + s.key + "' does not apply to task " + job.task);
    bool needs_model = job.task != "nf-kummer-sim" && job.task != "verify";
    if (needs_model && !job.model) at(kind.line, kind.column, "task " + job.task + " needs a [model] block before [task]");
    if ((job.task == "nf-as" || job.task == "nf-kummer") && !job.stream)
      at(kind.line, kind.column, "task " + job.task + " needs a [stream] block before [task]");

    for (const auto& s : b) {
      if (s.key == "f" || s.key == "h") job.poly = guarded(s, [&] { return parse_poly_raw(job.model, s.value, true); });
      else if (s.key == "minpoly") job.poly = guarded(s, [&] { return parse_poly_raw(job.model, s.value, true); });
      else if (s.key == "prec") {
        job.prec = guarded(s, [&] {
          Value v = job.model ? parse_precision(job.model, s.value) : Value::parse(s.value);
          require_positive(v);
          return v;
        });
      } else if (s.key == "confirmations")
        job.confirmations = static_cast<std::size_t>(guarded(s, [&] { return parse_long(s.value, 1, 64); }));
      else if (s.key == "p") job.sim_p = guarded(s, [&] { return parse_long(s.value, 2, 997); });
      else if (s.key == "vp") {
        job.sim_vp = guarded(s, [&] { return Value::parse(s.value); });
        guarded(s, [&] {
          require_positive(job.sim_vp);
          return 0;
        });
      } else if (s.key == "entries") {
        guarded(s, [&] {
          std::istringstream es(s.value);
          std::string item;
          while (std::getline(es, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos) fail(ErrorCode::Parse, "entries are 'index: value' pairs");
            long i = parse_long(trim(item.substr(0, colon)), 1, 100000);
            if (job.sim_entries.count(i)) fail(ErrorCode::Parse, "index " + std::to_string(i) + " listed twice");
            job.sim_entries[i] = Value::parse(item.substr(colon + 1));
          }
          return 0;
        });
      } else if (s.key == "declared_e") job.declared_e = guarded(s, [&] { return parse_long(s.value, 1, 1 << 20); });
      else if (s.key == "declared_f") job.declared_f = guarded(s, [&] { return parse_long(s.value, 1, 1 << 20); });
      else if (s.key == "residue_separable") job.residue_separable = guarded(s, [&] { return parse_bool(s.value); });
      else if (s.key == "eta") job.eta = guarded(s, [&] { return parse_long(s.value, -1000000, 1000000); });
      else if (s.key == "suite") {
        static const std::set<std::string> names = {"delta", "oneunit", "asnf", "kummer", "ext", "all"};
        if (!names.count(s.value)) at(s.line, s.column, "unknown suite '" + s.value + "' (delta, oneunit, asnf, kummer, ext, all)");
        job.suite = s.value;
      }
      else if (s.key == "seed")
        job.seed = static_cast<std::uint64_t>(guarded(s, [&] { return parse_long(s.value, 0, 1L << 62); }));
      else if (s.key == "size") job.size = static_cast<std::size_t>(guarded(s, [&] { return parse_long(s.value, 1, 1000000); }));
    }
    const char* required = job.task == "nf-as" || job.task == "nf-kummer" ? "f"
                           : job.task == "nf-kummer-sim"                  ? "entries"
                           : job.task == "ext-invariants"                 ? "minpoly"
                           : job.task == "hensel"                         ? "h"
                                                                          : "suite";
    need(b, required, hline, "task");
  }

  std::string name_;
};

}  // namespace

Poly parse_poly(const ModelPtr& m, const std::string& text, bool allow_x) {
  try {
    return parse_poly_raw(m, text, allow_x);
  } catch (const ExprError& e) {
    fail(ErrorCode::Parse, expr_message(text, e));
  }
}

Element parse_element(const ModelPtr& m, const std::string& text) {
  try {
    return parse_element_raw(m, text);
  } catch (const ExprError& e) {
    fail(ErrorCode::Parse, expr_message(text, e));
  }
}

Job parse_job(const std::string& text, const std::string& name) {
  try {
    return JobBuilder(name).build(text);
  } catch (const Located& e) {
    fail(ErrorCode::Parse, e.msg);
  }
}

}  // namespace ramlab::cli
