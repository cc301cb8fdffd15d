/* Copyright (C) 2026 The chainring authors
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

#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chainring/io.hpp"
#include "chainring/suites.hpp"

namespace chainring::cli {

namespace {

struct Opts {
  bool json = false;
  uint64_t seed = 0;
  int guard = 24;

  std::string ring;
  std::string family = "unramified";
  int64_t p = 2;
  int n = 1;
  int s = 2;
  std::string modulus;
  int m = 0;

  std::string matrix;
  std::string matrix2;
  std::string input;
  std::string elem;
  int k = 1;
  std::string form = "euclidean";

  int ell = 0;
  uint64_t q = 0;
  std::string set;
  std::string t;

  std::string suite;
  std::vector<std::string> fixtures;
  int cases = -1;
  int transforms = -1;
};

std::string trim(std::string s) {
  const char* ws = " \t\r\n";
  s.erase(0, s.find_first_not_of(ws));
  s.erase(s.find_last_not_of(ws) + 1);
  return s;
}

std::string display(const Element& e) {
  if (e.digits().size() == 1) return std::to_string(e.digits()[0]);
  return "(" + element_to_text(e) + ")";
}

std::string display_set(const std::vector<Element>& v) {
  std::string out = "{";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + display(v[i]);
  return out + "}";
}

std::string display_poly(const Poly& f) {
  std::string out = "[";
  for (size_t i = 0; i < f.size(); ++i) out += (i ? " " : "") + display(f[i]);
  return out + "]";
}

class Runner {
 public:
  Runner(const Opts& o, std::istream& in, std::ostream& out) : o_(o), in_(in), out_(out) {}

  TowerPtr tower() const {
    if (o_.ring.empty()) fail(ErrorKind::ParseError, "--ring is required");
    TowerPtr t = fixture(o_.ring);
    if (o_.m > 0) {
      if (t->m() != 1) fail(ErrorKind::Mismatch, "--m needs a fixture without extension");
      t = Tower::extend(t->top_ptr(), o_.m);
    }
    return t;
  }

  RingPtr base_ring() const {
    TowerPtr t = tower();
    if (t->m() != 1) fail(ErrorKind::Mismatch, o_.ring + " is an extension; pass a base ring fixture");
    return t->top_ptr();
  }

  std::string payload() const {
    if (!o_.matrix.empty()) return o_.matrix;
    std::string text;
    if (!o_.input.empty() && o_.input != "-") {
      std::ifstream f(o_.input);
      if (!f) fail(ErrorKind::ParseError, "cannot read " + o_.input);
      std::stringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    } else {
      std::stringstream ss;
      ss << in_.rdbuf();
      text = ss.str();
    }
    if (trim(text).empty()) fail(ErrorKind::ParseError, "no input: pass --matrix, --input or a payload on stdin");
    return text;
  }

  json parse_json(const std::string& text) const {
    try {
      return json::parse(text);
    } catch (const json::exception& e) {
      fail(ErrorKind::ParseError, std::string("bad JSON payload: ") + e.what());
    }
  }

  /// A code object, a JSON matrix or a text matrix over the tower top.
  Code code_from(const std::string& raw, TowerPtr tw) const {
    std::string text = trim(raw);
    if (!text.empty() && text.front() == '{') {
      Code c = code_from_json(parse_json(text));
      if (tw && !c.tower()->same_as(*tw)) fail(ErrorKind::RingMismatch, "code object is over a different tower");
      return c;
    }
    if (!tw) tw = tower();
    Mat g = (!text.empty() && text.front() == '[') ? matrix_from_json(tw->top_ptr(), parse_json(text))
                                                   : matrix_from_text(tw->top_ptr(), text);
    if (g.rows() == 0) fail(ErrorKind::ParseError, "empty matrix");
    return Code::from_matrix(tw, g);
  }

  Code input_code() const {
    TowerPtr tw = o_.ring.empty() ? nullptr : tower();
    return code_from(payload(), tw);
  }

  void emit_code(const Code& c) const {
    if (o_.json) {
      out_ << code_to_json(c).dump(2) << "\n";
      return;
    }
    if (c.is_zero()) out_ << "0\n";
    else out_ << matrix_to_text(c.rsf());
    out_ << "type " << type_to_text(c) << "\n";
  }

  void emit(const json& j, const std::string& text) const {
    if (o_.json) out_ << j.dump(2) << "\n";
    else out_ << text;
  }

  // ------------------------------------------------------------ ring

  int ring_show() const {
    RingPtr r;
    TowerPtr t;
    if (!o_.ring.empty()) {
      t = tower();
      r = t->top_ptr();
    } else {
      std::optional<std::vector<int64_t>> mod;
      if (!o_.modulus.empty()) {
        mod.emplace();
        std::string tmp = o_.modulus;
        for (char& ch : tmp)
          if (ch == ',') ch = ' ';
        std::istringstream ss(tmp);
        int64_t v;
        while (ss >> v) mod->push_back(v);
      }
      r = Ring::make(parse_family(o_.family), o_.p, o_.n, o_.s, mod);
    }
    const Ring& R = *r;
    std::vector<Element> gamma = R.teichmuller_set();
    json j;
    j["name"] = R.name();
    if (t && t->m() > 1) j["tower"] = tower_to_json(*t);
    else j["ring"] = ring_to_json(R);
    j["q"] = R.residue_size();
    j["size"] = R.size();
    j["theta"] = element_to_json(R.theta());
    json g = json::array();
    for (const auto& e : gamma) g.push_back(element_to_json(e));
    j["teichmuller"] = g;
    j["units"] = R.unit_count();

    std::ostringstream os;
    os << R.name() << "\n";
    os << std::left << std::setw(10) << "family" << family_name(R.family()) << "\n";
    os << std::setw(10) << "p n s" << R.p() << " " << R.residue_degree() << " " << R.s() << "\n";
    if (t && t->m() > 1) os << std::setw(10) << "over" << t->base().name() << ", m = " << t->m() << "\n";
    if (R.level() > 0) os << std::setw(10) << "modulus" << display_poly(R.modulus()) << "\n";
    os << std::setw(10) << "q" << R.residue_size() << "\n";
    os << std::setw(10) << "size" << R.size() << "\n";
    os << std::setw(10) << "theta" << display(R.theta()) << "\n";
    os << "Gamma = " << display_set(gamma) << "\n";
    os << "units = " << R.unit_count() << "\n";
    emit(j, os.str());
    return 0;
  }

  int ring_list() const {
    json j = json::array();
    std::ostringstream os;
    for (const auto& name : fixture_names()) {
      TowerPtr t = fixture(name);
      std::string desc = t->top().name();
      if (t->m() > 1) desc += " over " + t->base().name();
      j.push_back({{"fixture", name}, {"ring", desc}, {"m", t->m()}});
      os << std::left << std::setw(6) << name << desc << "\n";
    }
    emit(j, os.str());
    return 0;
  }

  // ------------------------------------------------------------ ext

  int ext_build() const {
    TowerPtr t = tower();
    json j = tower_to_json(*t);
    std::ostringstream os;
    os << t->top().name() << " over " << t->base().name() << ", m = " << t->m() << "\n";
    os << "modulus " << display_poly(t->top().modulus()) << "\n";
    os << "basis   " << display_set(t->basis()) << "\n";
    os << "q       " << t->q() << "\n";
    emit(j, os.str());
    return 0;
  }

  Element elem(const TowerPtr& t) const {
    if (o_.elem.empty()) fail(ErrorKind::ParseError, "--elem is required");
    std::string text = trim(o_.elem);
    if (text.front() == '[') return element_from_json(t->top(), parse_json(text));
    return element_from_text(t->top(), text);
  }

  int ext_trace() const {
    TowerPtr t = tower();
    Element tr = t->trace(elem(t));
    emit(json{{"trace", element_to_json(tr)}}, element_to_text(tr) + "\n");
    return 0;
  }

  int ext_frobenius() const {
    TowerPtr t = tower();
    Element f = t->frobenius(elem(t), o_.k);
    emit(json{{"frobenius", element_to_json(f)}, {"k", o_.k}}, element_to_text(f) + "\n");
    return 0;
  }

  int ext_dualbasis() const {
    TowerPtr t = tower();
    json b = json::array(), d = json::array();
    std::ostringstream os;
    for (size_t i = 0; i < t->basis().size(); ++i) {
      b.push_back(element_to_json(t->basis()[i]));
      d.push_back(element_to_json(t->dual_basis()[i]));
      os << "alpha_" << i << " = " << display(t->basis()[i]) << "   alpha*_" << i << " = "
         << display(t->dual_basis()[i]) << "\n";
    }
    Mat g = t->gram_matrix();
    os << "gram\n" << matrix_to_text(g);
    emit(json{{"basis", b}, {"dual_basis", d}, {"gram", matrix_to_json(g)}}, os.str());
    return 0;
  }

  // ------------------------------------------------------------ code

  int code_cmd(const std::string& sub) const {
    if (sub == "ext") {
      TowerPtr t = tower();
      Code c = code_from(payload(), t->base_tower());
      emit_code(extension(c, t));
      return 0;
    }
    Code b = input_code();
    if (sub == "rsf") emit_code(b);
    else if (sub == "dual") {
      Form f = Form::euclidean;
      if (o_.form == "hermitian") f = Form::hermitian;
      else if (o_.form == "phi") return emit_code(dual_phi_prime(b)), 0;
      else if (o_.form != "euclidean") fail(ErrorKind::ParseError, "--form must be euclidean, hermitian or phi");
      emit_code(dual(b, f));
    } else if (sub == "res") emit_code(restriction(b));
    else if (sub == "trace") emit_code(trace_code(b));
    else if (sub == "closure") emit_code(closure(b));
    else if (sub == "interior") emit_code(interior(b));
    else if (sub == "sum" || sub == "intersect") {
      if (o_.matrix2.empty()) fail(ErrorKind::ParseError, "--matrix2 is required");
      Code c = code_from(o_.matrix2, b.tower());
      emit_code(sub == "sum" ? sum(b, c) : intersect(b, c));
    } else if (sub == "invariant") {
      const bool over_r = is_galois_invariant(b), fixed = is_sigma_fixed(b);
      const bool tr_res = trace_code(b) == restriction(b);
      std::ostringstream os;
      os << "rsf over base   " << (over_r ? "yes" : "no") << "\n";
      os << "sigma-fixed     " << (fixed ? "yes" : "no") << "\n";
      os << "Tr = Res        " << (tr_res ? "yes" : "no") << "\n";
      emit(json{{"galois_invariant", over_r}, {"sigma_fixed", fixed}, {"trace_eq_restriction", tr_res}}, os.str());
    } else if (sub == "delsarte") {
      DelsarteReport r = delsarte_check(b);
      std::ostringstream os;
      os << "Tr(dual)\n" << (r.lhs.is_zero() ? "0\n" : matrix_to_text(r.lhs.rsf()));
      os << "dual(Res)\n" << (r.rhs.is_zero() ? "0\n" : matrix_to_text(r.rhs.rsf()));
      os << "equal " << (r.equal ? "yes" : "no") << "\n";
      emit(json{{"lhs", code_to_json(r.lhs)}, {"rhs", code_to_json(r.rhs)}, {"equal", r.equal}}, os.str());
    } else if (sub == "bounds") {
      BoundsReport r = bounds_report(b);
      json checks = json::array();
      std::ostringstream os;
      auto list = [](const std::vector<int>& v) {
        std::string s = "{";
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "}";
      };
      os << "level set " << list(r.level_set) << "  dual level set " << list(r.dual_level_set) << "\n";
      os << "ranks: code " << r.rank_code << ", res " << r.rank_restriction << ", trace " << r.rank_trace
         << ", interior " << r.rank_interior << ", closure " << r.rank_closure << "\n";
      for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"relation", c.relation}, {"rhs", c.rhs}, {"holds", c.holds}});
        os << std::left << std::setw(38) << c.name << std::right << std::setw(4) << c.lhs << " " << c.relation
           << " " << std::left << std::setw(4) << c.rhs << (c.holds ? "ok" : "FAILS") << "\n";
      }
      json j{{"level_set", r.level_set},
             {"dual_level_set", r.dual_level_set},
             {"levels_divide_m", r.levels_divide_m},
             {"rank_code", r.rank_code},
             {"rank_restriction", r.rank_restriction},
             {"rank_trace", r.rank_trace},
             {"rank_interior", r.rank_interior},
             {"rank_closure", r.rank_closure},
             {"checks", checks},
             {"all_hold", r.all_hold()}};
      emit(j, os.str());
    }
    return 0;
  }

  // ------------------------------------------------------------ cyclic

  CyclicContextPtr context() const {
    if (o_.ell <= 0) fail(ErrorKind::ParseError, "--ell is required");
    return CyclicContext::make(base_ring(), o_.ell);
  }

  DefiningSet defining_set(const CyclicContext& ctx) const { return set_from_text(o_.set, ctx.ell()); }

  int t_value(int def) const {
    if (o_.t.empty()) return def;
    try {
      size_t pos = 0;
      int v = std::stoi(o_.t, &pos);
      if (pos != o_.t.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "--t must be an integer here");
    }
  }

  int cyclic_cmd(const std::string& sub) const {
    if (sub == "cosets") {
      uint64_t q = o_.q;
      if (!o_.ring.empty()) q = base_ring()->residue_size();
      if (q == 0) fail(ErrorKind::ParseError, "pass --q or --ring");
      if (o_.ell <= 0) fail(ErrorKind::ParseError, "--ell is required");
      CosetTable tab = cyclotomic_cosets(o_.ell, q);
      std::string text;
      for (const auto& c : tab.cosets) text += (text.empty() ? "" : " ") + set_to_text(c);
      emit(json{{"ell", o_.ell}, {"q", q}, {"reps", tab.reps}, {"cosets", tab.cosets}}, text + "\n");
      return 0;
    }
    if (sub == "minweight") {
      Code c = input_code();
      int w = min_weight(c);
      emit(json{{"min_weight", w}}, std::to_string(w) + "\n");
      return 0;
    }
    auto ctx = context();
    const int s = ctx->base().s();
    if (sub == "context") {
      json factors = json::array(), idems = json::array();
      std::ostringstream os;
      os << ctx->base().name() << ", l = " << ctx->ell() << ", extension degree " << ctx->tower()->m() << "\n";
      for (size_t i = 0; i < ctx->cosets().reps.size(); ++i) {
        factors.push_back(poly_to_json(ctx->factors()[i]));
        idems.push_back(poly_to_json(ctx->idempotents()[i]));
        os << "Z_" << ctx->cosets().reps[i] << " = " << set_to_text(ctx->cosets().cosets[i]) << "\n";
        os << "  factor     " << display_poly(ctx->factors()[i]) << "\n";
        os << "  idempotent " << display_poly(ctx->idempotents()[i]) << "\n";
      }
      json j{{"ring", ring_to_json(ctx->base())},
             {"ell", ctx->ell()},
             {"cosets", ctx->cosets().cosets},
             {"factors", factors},
             {"idempotents", idems}};
      emit(j, os.str());
    } else if (sub == "eval") {
      emit_code(ctx->eval_code(defining_set(*ctx), t_value(0)));
    } else if (sub == "genpoly") {
      Poly g = ctx->generator_polynomial(defining_set(*ctx));
      emit(json{{"tower", tower_to_json(*ctx->tower())}, {"poly", poly_to_json(g)}}, display_poly(g) + "\n");
    } else if (sub == "multiindex") {
      if (o_.t.empty()) {
        json arr = json::array();
        std::ostringstream os;
        for (const auto& mi : ctx->all_multiindices()) {
          Code c = ctx->code_from_multiindex(mi);
          arr.push_back({{"t", mi}, {"type", c.type()}});
          std::string tt;
          for (size_t i = 0; i < mi.size(); ++i) tt += (i ? "," : "") + std::to_string(mi[i]);
          os << "(" << tt << ") " << type_to_text(c) << "\n";
        }
        emit(arr, os.str());
      } else {
        std::string tmp = o_.t;
        for (char& ch : tmp)
          if (ch == ',' || ch == '(' || ch == ')') ch = ' ';
        std::istringstream ss(tmp);
        MultiIndex mi;
        int v;
        while (ss >> v) mi.push_back(v);
        emit_code(ctx->code_from_multiindex(mi));
      }
    } else if (sub == "restrict") {
      RestrictedReport r = ctx->restricted_code(defining_set(*ctx), t_value(0));
      std::ostringstream os;
      auto show = [&](const char* label, const Code& c) {
        os << label << " " << type_to_text(c) << "\n" << (c.is_zero() ? "0\n" : matrix_to_text(c.rsf()));
      };
      show("Tr(B_{s-t}(A))^perp", r.by_trace_dual);
      show("Res(B_t(A)^perp)", r.by_dual_restriction);
      show("Res(B_{s-t}(-complement A))", r.by_opposite);
      os << "first = second " << (r.trace_eq_restriction ? "yes" : "no") << "\n";
      os << "first = third  " << (r.trace_eq_opposite ? "yes" : "no") << "\n";
      os << "second = third " << (r.restriction_eq_opposite ? "yes" : "no") << "\n";
      json j{{"by_trace_dual", code_to_json(r.by_trace_dual)},
             {"by_dual_restriction", code_to_json(r.by_dual_restriction)},
             {"by_opposite", code_to_json(r.by_opposite)},
             {"trace_eq_restriction", r.trace_eq_restriction},
             {"trace_eq_opposite", r.trace_eq_opposite},
             {"restriction_eq_opposite", r.restriction_eq_opposite}};
      emit(j, os.str());
    } else if (sub == "bch") {
      BchReport r = ctx->bch_check(defining_set(*ctx), t_value(s - 1));
      std::ostringstream os;
      os << "interval w=" << r.interval.w << " u=" << r.interval.u << " v=" << r.interval.v << "\n";
      os << "q-invariant " << (r.q_invariant ? "yes" : "no") << "\n";
      os << "code " << type_to_text(r.code) << "\n";
      if (r.min_weight) os << "d = " << *r.min_weight << ", designed " << r.designed << "\n";
      else os << "zero code, designed " << r.designed << "\n";
      os << "holds " << (r.holds ? "yes" : "no") << "\n";
      json j{{"interval", {{"w", r.interval.w}, {"u", r.interval.u}, {"v", r.interval.v}}},
             {"q_invariant", r.q_invariant},
             {"code", code_to_json(r.code)},
             {"min_weight", r.min_weight ? json(*r.min_weight) : json(nullptr)},
             {"designed", r.designed},
             {"holds", r.holds}};
      emit(j, os.str());
    }
    return 0;
  }

  // ------------------------------------------------------------ verify

  int verify() const {
    SuiteOptions so;
    so.seed = o_.seed;
    so.cases = o_.cases;
    so.transforms = o_.transforms;
    so.ell = o_.ell > 0 ? o_.ell : -1;
    for (const auto& f : o_.fixtures) {
      std::string tmp = f;
      for (char& ch : tmp)
        if (ch == ',') ch = ' ';
      std::istringstream ss(tmp);
      std::string name;
      while (ss >> name) so.fixtures.push_back(name);
    }
    if (!o_.ring.empty()) so.fixtures.push_back(o_.ring);
    SuiteResult r = run_suite(o_.suite, so);
    json j{{"suite", r.suite},   {"cases", r.cases}, {"passed", r.passed},
           {"failed", r.failed}, {"ok", r.ok()},     {"counterexample", r.counterexample},
           {"notes", r.notes}};
    std::ostringstream os;
    os << r.suite << ": " << r.passed << "/" << r.cases << " pass, " << r.failed << " failed\n";
    if (!r.counterexample.empty()) os << "first counterexample: " << r.counterexample << "\n";
    for (const auto& n : r.notes) os << "  " << n << "\n";
    emit(j, os.str());
    return r.ok() ? 0 : 1;
  }

 private:
  const Opts& o_;
  std::istream& in_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Opts o;
  CLI::App app{"Linear codes over finite chain rings and their Galois extensions", "chainring"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--seed", o.seed, "Seed for randomized suites");
  app.add_option("--guard", o.guard, "Enumeration guard in bits")->check(CLI::Range(1, 40));

  auto ring_opts = [&](CLI::App* c) {
    c->add_option("--ring,--fixture", o.ring, "Named fixture (see `ring list`)");
    c->add_option("--m", o.m, "Extend the fixture by this degree")->check(CLI::PositiveNumber);
  };
  auto code_input = [&](CLI::App* c) {
    ring_opts(c);
    c->add_option("--matrix", o.matrix, "Generator matrix text, JSON matrix or code object");
    c->add_option("--input", o.input, "Read the payload from a file ('-' for stdin)");
  };

  CLI::App* ring = app.add_subcommand("ring", "Chain ring summaries");
  ring->require_subcommand(1);
  CLI::App* ring_show = ring->add_subcommand("show", "Summary of one ring");
  ring_opts(ring_show);
  ring_show->add_option("--family", o.family, "unramified or equal-characteristic");
  ring_show->add_option("--p", o.p, "Characteristic prime");
  ring_show->add_option("--n", o.n, "Residue degree");
  ring_show->add_option("--s", o.s, "Nilpotency index");
  ring_show->add_option("--modulus", o.modulus, "Integer modulus, constant term first");
  CLI::App* ring_list = ring->add_subcommand("list", "Named fixtures");

  CLI::App* ext = app.add_subcommand("ext", "Galois extensions");
  ext->require_subcommand(1);
  std::map<std::string, CLI::App*> ext_cmds;
  for (const char* name : {"build", "trace", "frobenius", "dualbasis"}) {
    CLI::App* c = ext->add_subcommand(name);
    ring_opts(c);
    ext_cmds[name] = c;
  }
  ext_cmds["trace"]->add_option("--elem", o.elem, "Element text or JSON")->required();
  ext_cmds["frobenius"]->add_option("--elem", o.elem, "Element text or JSON")->required();
  ext_cmds["frobenius"]->add_option("--k", o.k, "Power of sigma");

  CLI::App* code = app.add_subcommand("code", "Linear codes");
  code->require_subcommand(1);
  std::map<std::string, CLI::App*> code_cmds;
  for (const char* name : {"rsf", "dual", "res", "trace", "ext", "closure", "interior", "invariant", "sum",
                           "intersect", "bounds", "delsarte"}) {
    CLI::App* c = code->add_subcommand(name);
    code_input(c);
    code_cmds[name] = c;
  }
  code_cmds["dual"]->add_option("--form", o.form, "euclidean, hermitian or phi");
  for (const char* name : {"sum", "intersect"})
    code_cmds[name]->add_option("--matrix2", o.matrix2, "Second code")->required();

  CLI::App* cyclic = app.add_subcommand("cyclic", "Cyclic codes");
  cyclic->require_subcommand(1);
  std::map<std::string, CLI::App*> cyc_cmds;
  for (const char* name : {"cosets", "context", "eval", "genpoly", "multiindex", "restrict", "bch", "minweight"}) {
    CLI::App* c = cyclic->add_subcommand(name);
    if (std::string(name) == "minweight") code_input(c);
    else ring_opts(c);
    c->add_option("--ell", o.ell, "Code length");
    cyc_cmds[name] = c;
  }
  cyc_cmds["cosets"]->add_option("--q", o.q, "Residue field size");
  for (const char* name : {"eval", "genpoly", "restrict", "bch"})
    cyc_cmds[name]->add_option("--set", o.set, "Defining set, e.g. 1,2,4")->required();
  for (const char* name : {"eval", "restrict", "bch", "multiindex"})
    cyc_cmds[name]->add_option("--t", o.t, "Layer t, or a multi-index such as 0,1,2");

  CLI::App* verify = app.add_subcommand("verify", "Run a seeded verification suite");
  verify->add_option("suite", o.suite, "Suite name")->required();
  verify->add_option("--fixture,--ring", o.fixtures, "Fixture(s) to run on");
  verify->add_option("--cases", o.cases, "Number of random cases");
  verify->add_option("--transforms", o.transforms, "Row transforms per matrix (rsf)");
  verify->add_option("--ell", o.ell, "Code length (cyclic suites)");
  verify->add_option("--seed", o.seed, "Seed");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const int saved_guard = guard_bits();
  set_guard_bits(o.guard);
  struct Restore {
    int bits;
    ~Restore() { set_guard_bits(bits); }
  } restore{saved_guard};

  Runner r(o, in, out);
  try {
    if (ring->parsed()) return ring_show->parsed() ? r.ring_show() : r.ring_list();
    if (ext->parsed()) {
      if (ext_cmds["build"]->parsed()) return r.ext_build();
      if (ext_cmds["trace"]->parsed()) return r.ext_trace();
      if (ext_cmds["frobenius"]->parsed()) return r.ext_frobenius();
      return r.ext_dualbasis();
    }
    if (code->parsed())
      for (const auto& [name, c] : code_cmds)
        if (c->parsed()) return r.code_cmd(name);
    if (cyclic->parsed())
      for (const auto& [name, c] : cyc_cmds)
        if (c->parsed()) return r.cyclic_cmd(name);
    if (verify->parsed()) return r.verify();
    (void)ring_list;
  } catch (const Error& e) {
    json j{{"error", std::string(e.name())}, {"message", e.what()}};
    err << j.dump() << "\n";
    return e.kind() == ErrorKind::UnknownSuite ? 2 : 1;
  }
  return 2;
}

}  // namespace chainring::cli
