// extern-C shim over the core library: opaque handles, status codes, string
// reports.
#include "pia.h"

#include <cstring>
#include <sstream>
#include <string>

#include "pia/conjugacy.hpp"
#include "pia/errors.hpp"
#include "pia/green.hpp"
#include "pia/inner.hpp"
#include "pia/io.hpp"
#include "pia/tx_structure.hpp"
#include "pia/verify.hpp"

struct pia_semigroup {
  pia::FiniteSemigroup s;
};

namespace {

thread_local std::string t_last_error;

pia_status status_of(const pia::Error& e) {
  switch (e.code()) {
    case pia::Errc::parse: return PIA_ERR_PARSE;
    case pia::Errc::limit_exceeded: return PIA_ERR_LIMIT;
    default: return PIA_ERR_INVALID;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
pia_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const pia::Error& e) {
    t_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return PIA_ERR_INTERNAL;
  }
}

std::string render(const pia::Report& rep, int json) {
  return json ? pia::emit_json(rep) : pia::emit_text(rep);
}

void add_suites(pia::Report& rep, const std::vector<pia::SuiteReport>& suites, int* failures) {
  int fails = 0;
  for (const auto& suite : suites) {
    for (const auto& check : suite.checks) {
      std::string value = check.pass ? "PASS" : "FAIL";
      if (!check.detail.empty()) value += " (" + check.detail + ")";
      rep.add(suite.suite + "." + check.name, value);
    }
    fails += suite.failures();
  }
  rep.add("failures", std::to_string(fails));
  if (failures) *failures = fails;
}

pia::Report base_report(const std::string& command, const std::string& input) {
  pia::Report rep;
  rep.command = command;
  rep.digest = pia::input_digest(input);
  return rep;
}

} // namespace

extern "C" {

const char* pia_version(void) { return "0.1.0"; }

const char* pia_last_error(void) { return t_last_error.c_str(); }

void pia_string_free(char* s) { std::free(s); }

pia_status pia_semigroup_from_table(const char* text, pia_semigroup** out) {
  return guarded([&]() {
    *out = new pia_semigroup{pia::parse_table(text)};
    return PIA_OK;
  });
}

pia_status pia_semigroup_from_name(const char* catalog_name, pia_semigroup** out) {
  return guarded([&]() {
    auto s = pia::catalog_lookup(catalog_name);
    if (!s) {
      t_last_error = std::string("unknown catalog name: ") + catalog_name;
      return PIA_ERR_INVALID;
    }
    *out = new pia_semigroup{std::move(*s)};
    return PIA_OK;
  });
}

pia_status pia_semigroup_from_rees(const char* rees_text, pia_semigroup** out) {
  return guarded([&]() {
    *out = new pia_semigroup{pia::rees_matrix(pia::parse_rees(rees_text))};
    return PIA_OK;
  });
}

void pia_semigroup_free(pia_semigroup* s) { delete s; }

int pia_semigroup_order(const pia_semigroup* s) { return s ? s->s.n : 0; }

pia_status pia_semigroup_format(const pia_semigroup* s, char** out) {
  return guarded([&]() {
    *out = dup_string(pia::format_table(s->s));
    return PIA_OK;
  });
}

pia_status pia_report_validate(const pia_semigroup* s, const char* echo, int json, char** out) {
  return guarded([&]() {
    pia::Report rep = base_report(std::string("validate ") + echo, pia::format_table(s->s));
    rep.add("order", std::to_string(s->s.n));
    rep.add("associative", "true");
    rep.add("identity", s->s.identity ? std::to_string(*s->s.identity) : "none");
    rep.add("idempotents", [&] {
      std::ostringstream os;
      auto idem = pia::idempotents(s->s);
      for (size_t i = 0; i < idem.size(); ++i) os << (i ? " " : "") << idem[i];
      return os.str();
    }());
    *out = dup_string(render(rep, json));
    return PIA_OK;
  });
}

pia_status pia_report_green(const pia_semigroup* s, const char* echo, int json, char** out) {
  return guarded([&]() {
    pia::GreenData g = pia::green(s->s);
    pia::Report rep = base_report(std::string("green ") + echo, pia::format_table(s->s));
    rep.add("order", std::to_string(s->s.n));
    rep.add("L", pia::to_string(g.l));
    rep.add("R", pia::to_string(g.r));
    rep.add("H", pia::to_string(g.h));
    rep.add("D", pia::to_string(g.d));
    rep.add("J", pia::to_string(g.j));
    std::ostringstream flags;
    for (size_t i = 0; i < g.group_h.size(); ++i) flags << (i ? " " : "") << (g.group_h[i] ? 1 : 0);
    rep.add("group-H-classes", flags.str());
    *out = dup_string(render(rep, json));
    return PIA_OK;
  });
}

pia_status pia_report_conj(const pia_semigroup* s, const char* echo, int json, char** out) {
  return guarded([&]() {
    pia::SemigroupWithOne sw(s->s);
    pia::Partition classes = pia::conjugacy_classes(sw);
    pia::Report rep = base_report(std::string("conj ") + echo, pia::format_table(s->s));
    rep.add("order", std::to_string(s->s.n));
    rep.add("classes", pia::to_string(classes));
    {
      std::ostringstream os;
      auto idem = pia::idempotents(s->s);
      for (size_t i = 0; i < idem.size(); ++i) os << (i ? " " : "") << idem[i];
      rep.add("idempotents", os.str());
    }
    for (const auto& block : classes.blocks)
      for (size_t i = 0; i < block.size(); ++i)
        for (size_t j = i + 1; j < block.size(); ++j) {
          auto w = pia::conjugators(sw, block[i], block[j]);
          std::ostringstream key, val;
          key << "witness[" << block[i] << "~" << block[j] << "]";
          if (w)
            val << "(" << w->g << "," << w->h << ")";
          else
            val << "none";
          rep.add(key.str(), val.str());
        }
    for (int a = 0; a < s->s.n; ++a) {
      std::ostringstream key, val;
      key << "centralizer[" << a << "]";
      auto c = pia::centralizer(s->s, a);
      for (size_t i = 0; i < c.size(); ++i) val << (i ? " " : "") << c[i];
      rep.add(key.str(), val.str());
    }
    *out = dup_string(render(rep, json));
    return PIA_OK;
  });
}

pia_status pia_report_inn(const pia_semigroup* s, const char* echo, long limit, int export_cayley,
                          int json, char** out) {
  return guarded([&]() {
    pia::SemigroupWithOne sw(s->s);
    pia::InnGenerators gens = pia::inn_generators(sw);
    std::optional<size_t> cap;
    if (limit > 0) cap = static_cast<size_t>(limit);
    auto cl = pia::closure(gens.maps, cap);
    pia::Report rep = base_report(std::string("inn ") + echo, pia::format_table(s->s));
    rep.add("order", std::to_string(s->s.n));
    rep.add("distinct-generators", std::to_string(gens.maps.size()));
    rep.add("size", std::to_string(cl.size()));
    for (size_t i = 0; i < gens.maps.size(); ++i) {
      std::ostringstream key, val;
      key << "generator[" << i << "]";
      const auto& prov = gens.provenance[i];
      val << "(" << prov.front().first << "," << prov.front().second
          << ") : " << pia::to_string(gens.maps[i]);
      if (prov.size() > 1) {
        val << " [also";
        for (size_t k = 1; k < prov.size(); ++k)
          val << " (" << prov[k].first << "," << prov[k].second << ")";
        val << "]";
      }
      rep.add(key.str(), val.str());
    }
    if (cl.size() <= 512) {
      for (size_t i = 0; i < cl.size(); ++i)
        rep.add("element[" + std::to_string(i) + "]", pia::to_string(cl[i]));
    }
    if (export_cayley) rep.add("cayley", "\n" + pia::format_table(pia::abstract_cayley(cl)));
    *out = dup_string(render(rep, json));
    return PIA_OK;
  });
}

pia_status pia_report_tx_classify(int n, int full, int json, char** out) {
  return guarded([&]() {
    auto [tx, codec] = pia::full_transformation_monoid(n);
    pia::SemigroupWithOne st(tx);
    pia::InnGenerators gens = pia::inn_generators(st);
    pia::Report rep = base_report("tx classify -n " + std::to_string(n), std::to_string(n));
    rep.add("x-size", std::to_string(n));
    rep.add("transformations", std::to_string(tx.n));
    rep.add("distinct-generators", std::to_string(gens.maps.size()));
    int small = 0;
    for (const auto& m : gens.maps)
      if (m.pairs.size() <= 1) ++small;
    rep.add("small-domain-generators", std::to_string(small));
    if (n <= 3 || full) {
      auto cl = pia::closure(gens.maps);
      rep.add("closure-size", std::to_string(cl.size()));
      auto all = pia::enumerate_w(n);
      int members = 0;
      for (const auto& w : all) members += pia::finite_membership(w, n);
      rep.add("pair-calculus-elements", std::to_string(all.size()));
      rep.add("members-by-criterion", std::to_string(members));
    }
    *out = dup_string(render(rep, json));
    return PIA_OK;
  });
}

pia_status pia_report_tx_verify(int n, int full, int json, char** out, int* failures) {
  return guarded([&]() {
    pia::Report rep = base_report("tx verify -n " + std::to_string(n), std::to_string(n));
    add_suites(rep, {pia::verify_tx_suite(n, full != 0)}, failures);
    *out = dup_string(render(rep, json));
    return PIA_OK;
  });
}

pia_status pia_report_gset_inn(const char* gset_text, const char* echo, int json, char** out) {
  return guarded([&]() {
    pia::GSet gs = pia::parse_gset(gset_text);
    pia::EndGData end = pia::end_g(gs);
    pia::SemigroupWithOne se(end.monoid);
    auto cl = pia::inn(se);
    pia::Report rep = base_report(std::string("gset inn ") + echo, gset_text);
    rep.add("group-order", std::to_string(gs.group.n));
    rep.add("x-size", std::to_string(gs.x_size));
    rep.add("orbits", pia::to_string(gs.orbits));
    rep.add("endomorphisms", std::to_string(end.maps.size()));
    rep.add("inn-size", std::to_string(cl.size()));
    if (cl.size() <= 512) {
      for (size_t i = 0; i < cl.size(); ++i)
        rep.add("element[" + std::to_string(i) + "]", pia::to_string(cl[i]));
    }
    *out = dup_string(render(rep, json));
    return PIA_OK;
  });
}

pia_status pia_report_gset_verify(const char* gset_text, const char* echo, int json, char** out,
                                  int* failures) {
  return guarded([&]() {
    pia::GSet gs = pia::parse_gset(gset_text);
    pia::Report rep = base_report(std::string("gset verify ") + echo, gset_text);
    add_suites(rep, {pia::verify_gset_suite("input", gs)}, failures);
    *out = dup_string(render(rep, json));
    return PIA_OK;
  });
}

pia_status pia_report_rees_verify(const char* rees_text, const char* echo, int json, char** out,
                                  int* failures) {
  return guarded([&]() {
    pia::ReesSpec spec = pia::parse_rees(rees_text);
    pia::Report rep = base_report(std::string("rees verify ") + echo, rees_text);
    add_suites(rep, {pia::verify_rees_suite("input", spec)}, failures);
    *out = dup_string(render(rep, json));
    return PIA_OK;
  });
}

pia_status pia_report_verify_all(int max_order, int tx_max, int tx_full, int json, char** out,
                                 int* failures) {
  return guarded([&]() {
    pia::VerifyOptions opts;
    opts.max_order = max_order;
    opts.tx_max = tx_max;
    opts.tx_full = tx_full != 0;
    pia::Report rep = base_report("verify all --max-order " + std::to_string(max_order),
                                  std::to_string(max_order));
    add_suites(rep, pia::verify_all(opts), failures);
    *out = dup_string(render(rep, json));
    return PIA_OK;
  });
}

} // extern "C"
