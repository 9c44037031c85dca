/*
 * Copyright 2026 The flatstring Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <optional>
#include <sstream>

#include "draw.hpp"
#include "flatstring/corpus.hpp"
#include "flatstring/errors.hpp"
#include "report.hpp"

namespace flatstring::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Options {
  std::string format = "text";
  bool timing = false;
  bool strict = false;
  unsigned threads = 1;
  std::size_t cap = kDefaultOrbitCap;
};

// One report per invocation. Text mode prints `text`; json mode prints `doc`.
class Report {
 public:
  Report(const Options& opt, std::string command) : opt_(opt), start_(Clock::now()) {
    doc_["schema"] = kSchema;
    doc_["command"] = std::move(command);
    doc_["inputs"] = ordered_json::array();
    doc_["limits"] = ordered_json::object();
    doc_["result"] = ordered_json::object();
    doc_["caveats"] = ordered_json::array();
  }

  void input(const std::string& text, const GaussCode& code) {
    doc_["inputs"].push_back(input_json(text, code));
  }
  ordered_json& limits() { return doc_["limits"]; }
  ordered_json& result() { return doc_["result"]; }
  void caveat(const std::string& c) {
    doc_["caveats"].push_back(c);
    text_ << "caveat: " << c << '\n';
  }
  std::ostringstream& text() { return text_; }

  void emit(std::ostream& out) {
    const auto ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    if (opt_.format == "json") {
      if (opt_.timing) doc_["timing_ms"] = ms;
      out << doc_.dump(2) << '\n';
    } else {
      out << text_.str();
      if (opt_.timing) out << "time: " << ms << " ms\n";
    }
  }

 private:
  const Options& opt_;
  Clock::time_point start_;
  ordered_json doc_;
  std::ostringstream text_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::size_t budget_for(std::size_t crossings, std::optional<std::size_t> budget,
                       std::size_t extra) {
  if (budget) {
    if (*budget < crossings) throw ValidationError("budget is below the current crossing count");
    return *budget;
  }
  return crossings + extra;
}

void print_trace(std::ostream& os, const ReductionTrace& trace) {
  os << "start: " << trace.initial.text() << '\n';
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    os << "step " << i + 1 << ": " << describe(s.move) << " -> " << s.after.text()
       << "  (crossings " << s.crossings_after << ", genus " << s.genus_after << ")\n";
  }
  os << "final: " << trace.final_code().text() << '\n';
}

void print_class(std::ostream& os, const ClassReport& r) {
  os << "reduced: " << r.reduced_code.text() << '\n'
     << "connected class: " << yes_no(r.connected_class) << '\n'
     << "parallel flag: " << to_string(r.parallel.overall) << '\n';
  for (const auto& p : r.parallel.pairs) {
    os << "  components " << p.first << ", " << p.second << ": " << to_string(p.level) << '\n';
  }
}

const char* step_word(bool pass) { return pass ? "PASS" : "FAIL"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Virtual n-strings as signed Gauss codes", "flatstring"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", opt.timing, "Include wall-clock timing in the report");
  app.add_flag("--strict", opt.strict, "Exit 3 on inconclusive verdicts");
  app.add_option("--threads", opt.threads, "Worker threads for searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap", opt.cap, "Type 3 orbit cap")->check(CLI::PositiveNumber);

  std::string code_a, code_b;
  std::optional<std::size_t> budget;
  std::optional<std::size_t> extra;
  std::uint64_t seed = 0;
  std::size_t steps = 10;
  std::string corpus_path;
  std::string draw_format = "dot";
  double time_limit = 600;
  std::size_t max_states = 2'000'000;
  bool require_cnp = false;
  bool witness = false;

  auto add_code = [](CLI::App* sub, std::string& target, const char* name) {
    sub->add_option(name, target, "Gauss code, e.g. \"a+ b- / a+ b-\"")->required();
  };
  auto add_budget = [&](CLI::App* sub) {
    auto* b = sub->add_option("--budget", budget, "Maximum crossings of intermediate codes");
    sub->add_option("--extra", extra, "Budget as crossings above the input")->excludes(b);
  };

  auto* validate = app.add_subcommand("validate", "Check a code against the grammar");
  add_code(validate, code_a, "code");
  auto* canon = app.add_subcommand("canon", "Canonical form");
  add_code(canon, code_a, "code");
  auto* genus = app.add_subcommand("genus", "Carter surface genus");
  add_code(genus, code_a, "code");
  auto* faces = app.add_subcommand("faces", "Faces of the Carter surface");
  add_code(faces, code_a, "code");
  auto* moves = app.add_subcommand("moves", "Enumerate move sites");
  add_code(moves, code_a, "code");
  add_budget(moves);
  auto* orbit = app.add_subcommand("orbit", "Type 3 orbit");
  add_code(orbit, code_a, "code");
  auto* reduce = app.add_subcommand("reduce", "Monotone reduction with trace");
  add_code(reduce, code_a, "code");
  auto* irreducible = app.add_subcommand("irreducible", "Crossing-irreducibility certificate");
  add_code(irreducible, code_a, "code");
  auto* classify_cmd = app.add_subcommand("classify", "Connectivity and parallelism");
  add_code(classify_cmd, code_a, "code");
  auto* equiv = app.add_subcommand("equiv", "Bounded equivalence search");
  add_code(equiv, code_a, "first");
  add_code(equiv, code_b, "second");
  add_budget(equiv);
  equiv->add_option("--time-limit", time_limit, "Seconds; 0 for none");
  equiv->add_option("--max-states", max_states, "Visited state limit");
  equiv->add_flag("--require-connected-nonparallel", require_cnp,
                  "Fail unless both inputs classify as connected and non-parallel");
  auto* scramble_cmd = app.add_subcommand("scramble", "Random move sequence");
  add_code(scramble_cmd, code_a, "code");
  add_budget(scramble_cmd);
  scramble_cmd->add_option("--seed", seed, "Random seed");
  scramble_cmd->add_option("--steps", steps, "Number of moves");
  auto* corpus_check = app.add_subcommand("corpus-check", "Re-derive corpus expectations");
  corpus_check->add_option("--corpus", corpus_path, "Corpus file (default: built-in)");
  auto* corpus = app.add_subcommand("corpus", "Corpus tools");
  corpus->require_subcommand(1);
  auto* corpus_check2 = corpus->add_subcommand("check", "Re-derive corpus expectations");
  corpus_check2->add_option("--corpus", corpus_path, "Corpus file (default: built-in)");
  auto* corpus_list = corpus->add_subcommand("list", "List corpus entries");
  corpus_list->add_option("--corpus", corpus_path, "Corpus file (default: built-in)");
  auto* verify = app.add_subcommand("verify-counterexample",
                                    "Check the interchange pair interchange_left / interchange_right");
  verify->add_option("--corpus", corpus_path, "Corpus file (default: built-in)");
  verify->add_flag("--witness", witness, "Also run the bounded witness search (step 5)");
  add_budget(verify);
  verify->add_option("--time-limit", time_limit, "Seconds for step 5; 0 for none");
  verify->add_option("--max-states", max_states, "Visited state limit for step 5");
  auto* draw = app.add_subcommand("draw", "Render a code as DOT or SVG");
  add_code(draw, code_a, "code");
  draw->add_option("--as", draw_format, "dot or svg")->check(CLI::IsMember({"dot", "svg"}));

  std::vector<const char*> argv{"flatstring"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  auto* sub = app.get_subcommands().front();
  std::string name = sub->get_name();
  if (sub == corpus) name = "corpus " + corpus->get_subcommands().front()->get_name();
  Report report(opt, name);
  auto& text = report.text();
  auto& result = report.result();
  report.limits()["cap"] = opt.cap;

  auto load_entries = [&]() {
    return corpus_path.empty() ? builtin_corpus() : load_corpus(corpus_path);
  };
  auto limits_for = [&](std::size_t b) {
    EquivalenceLimits lim;
    lim.budget = b;
    lim.max_states = max_states;
    lim.time_limit = std::chrono::milliseconds(static_cast<long long>(time_limit * 1000));
    lim.threads = opt.threads;
    lim.orbit_cap = opt.cap;
    report.limits()["budget"] = b;
    report.limits()["max_states"] = max_states;
    report.limits()["time_limit_s"] = time_limit;
    report.limits()["threads"] = opt.threads;
    return lim;
  };

  int code = kOk;
  try {
    if (sub == validate) {
      try {
        const auto c = parse_code(code_a);
        report.input(code_a, c);
        result["valid"] = true;
        result["components"] = c.component_count();
        result["crossings"] = c.crossing_count();
        result["serialized"] = serialize(c);
        text << "valid: " << serialize(c) << " (" << c.component_count() << " components, "
             << c.crossing_count() << " crossings)\n";
      } catch (const ParseError& e) {
        result["valid"] = false;
        result["error"] = e.what();
        result["position"] = e.position();
        text << "invalid: " << e.what() << '\n';
        code = kCheckFailed;
      }
    } else if (sub == canon) {
      const auto c = parse_code(code_a);
      report.input(code_a, c);
      result["canonical"] = canonical_text(c);
      text << canonical_text(c) << '\n';
    } else if (sub == genus) {
      const auto c = parse_code(code_a);
      report.input(code_a, c);
      const auto s = carter_genus(c);
      result = to_json(s);
      text << "genus: " << s.genus_total << '\n'
           << "surface components: " << s.component_count << '\n'
           << "connected: " << yes_no(s.connected) << '\n';
    } else if (sub == faces) {
      const auto c = parse_code(code_a);
      report.input(code_a, c);
      const auto fd = trace_faces(c);
      result = to_json(fd);
      result["genus"] = surface_report(fd).genus_total;
      text << "V=" << fd.vertex_count() << " E=" << fd.edge_count() << " F=" << fd.faces.size()
           << " genus=" << surface_report(fd).genus_total << '\n';
      for (std::size_t i = 0; i < fd.faces.size(); ++i) {
        const auto& f = fd.faces[i];
        text << "face " << i << " degree " << f.degree() << ":";
        for (const auto& d : f.boundary) {
          text << ' ' << d.component << ':' << d.edge << (d.forward ? '>' : '<');
        }
        text << '\n';
      }
    } else if (sub == moves) {
      const auto c = parse_code(code_a);
      report.input(code_a, c);
      const auto b = budget_for(c.crossing_count(), budget, extra.value_or(0));
      report.limits()["budget"] = b;
      result["sites"] = ordered_json::array();
      const auto sites = enumerate_all(c, b);
      for (const auto& s : sites) {
        result["sites"].push_back(to_json(s));
        text << describe(s) << '\n';
      }
      result["count"] = sites.size();
      text << sites.size() << " sites within budget " << b << '\n';
    } else if (sub == orbit) {
      const auto c = parse_code(code_a);
      report.input(code_a, c);
      const auto o = type3_orbit(c, opt.cap);
      result = to_json(o);
      text << "orbit size: " << o.members.size() << (o.exhausted ? " (exhausted)" : " (capped)")
           << '\n';
      for (const auto& m : o.members) text << "  " << m.text() << '\n';
      if (!o.exhausted) {
        report.caveat("orbit cap reached; the member list is partial");
        if (opt.strict) code = kInconclusive;
      }
    } else if (sub == reduce) {
      const auto c = parse_code(code_a);
      report.input(code_a, c);
      const auto r = reduce_monotone(c, opt.cap);
      result = to_json(r.trace);
      result["complete"] = r.complete;
      print_trace(text, r.trace);
      if (!r.complete) {
        report.caveat("an orbit hit the cap; the reduction may not be complete");
        if (opt.strict) code = kInconclusive;
      }
    } else if (sub == irreducible) {
      const auto c = parse_code(code_a);
      report.input(code_a, c);
      const auto cert = is_crossing_irreducible(c, opt.cap);
      result["irreducible"] = cert.irreducible;
      result["orbit"] = to_json(cert.orbit);
      text << "crossing-irreducible: " << yes_no(cert.irreducible) << '\n';
      if (cert.irreducible) {
        text << "orbit of " << cert.orbit.members.size()
             << " members exhausted with no decreasing move\n";
      } else {
        ordered_json path = ordered_json::array();
        for (const auto& m : cert.witness_path) path.push_back(to_json(m));
        result["witness_member"] = cert.witness_member->text();
        result["witness_path"] = std::move(path);
        result["witness_site"] = to_json(*cert.witness_site);
        text << "member " << cert.witness_member->text() << " (" << cert.witness_path.size()
             << " Type 3 moves away) admits " << describe(*cert.witness_site) << '\n';
      }
    } else if (sub == classify_cmd) {
      const auto c = parse_code(code_a);
      report.input(code_a, c);
      const auto r = classify(c, opt.cap);
      result = to_json(r);
      print_class(text, r);
      for (const auto& cv : r.caveats) report.caveat(cv);
    } else if (sub == equiv) {
      const auto a = parse_code(code_a);
      const auto b = parse_code(code_b);
      report.input(code_a, a);
      report.input(code_b, b);
      const auto lim = limits_for(
          budget_for(std::max(a.crossing_count(), b.crossing_count()), budget, extra.value_or(2)));
      if (require_cnp) {
        const auto ca = classify(a, opt.cap);
        const auto cb = classify(b, opt.cap);
        result["first_class"] = to_json(ca);
        result["second_class"] = to_json(cb);
        if (!connected_nonparallel(ca) || !connected_nonparallel(cb)) {
          result["status"] = "precondition-failed";
          text << "precondition failed: an input is not connected and non-parallel\n";
          report.emit(out);
          return kCheckFailed;
        }
      }
      const auto v = equivalent_bounded(a, b, lim);
      const auto vj = to_json(v);
      for (const auto& [k, val] : vj.items()) result[k] = val;
      text << "status: " << to_string(v.status) << " (" << v.stop_reason << ")\n"
           << "budget: " << v.budget << ", states explored: " << v.states_explored << '\n';
      if (v.status == EquivalenceStatus::equivalent_with_witness) {
        text << "witness (" << v.witness.size() << " moves from " << v.from.text() << "):\n";
        for (const auto& m : v.witness) text << "  " << describe(m) << '\n';
      }
      for (const auto& cv : v.caveats) report.caveat(cv);
      if (v.status == EquivalenceStatus::inconclusive_budget_exhausted && opt.strict) {
        code = kInconclusive;
      }
    } else if (sub == scramble_cmd) {
      const auto c = parse_code(code_a);
      report.input(code_a, c);
      const auto b = budget_for(c.crossing_count(), budget, extra.value_or(4));
      report.limits()["budget"] = b;
      report.limits()["seed"] = seed;
      report.limits()["steps"] = steps;
      const auto s = scramble(c, seed, steps, b);
      result["code"] = serialize(s.code);
      result["canonical"] = canonical_text(s.code);
      result["steps_applied"] = s.steps_applied;
      result["stuck"] = s.stuck;
      text << serialize(s.code) << '\n';
    } else if (sub == corpus_check || sub == corpus) {
      if (sub == corpus && corpus->got_subcommand(corpus_list)) {
        result["entries"] = ordered_json::array();
        for (const auto& e : load_entries()) {
          result["entries"].push_back({{"name", e.name}, {"code", e.code_text}, {"note", e.note}});
          text << e.name << ": " << e.code_text << '\n';
        }
      } else {
        const auto entries = load_entries();
        const auto bad = check_corpus(entries, opt.cap);
        result["entries"] = entries.size();
        result["mismatches"] = ordered_json::array();
        for (const auto& m : bad) {
          result["mismatches"].push_back({{"entry", m.entry},
                                          {"field", m.field},
                                          {"expected", m.expected},
                                          {"actual", m.actual}});
          text << "MISMATCH " << m.entry << ' ' << m.field << ": expected " << m.expected
               << ", got " << m.actual << '\n';
        }
        result["ok"] = bad.empty();
        text << entries.size() << " entries, " << bad.size() << " mismatches\n";
        if (!bad.empty()) code = kCheckFailed;
      }
    } else if (sub == verify) {
      const auto entries = load_entries();
      auto find = [&](const std::string& n) -> const CorpusEntry& {
        for (const auto& e : entries) {
          if (e.name == n) return e;
        }
        throw ValidationError("corpus has no entry " + n);
      };
      result["steps"] = ordered_json::array();
      bool failed = false;
      bool inconclusive = false;
      auto record = [&](int number, const std::string& title, const std::string& verdict,
                        ordered_json detail) {
        result["steps"].push_back(
            {{"step", number}, {"title", title}, {"verdict", verdict}, {"detail", detail}});
        text << "step " << number << " " << title << ": " << verdict << '\n';
        if (verdict == "FAIL") failed = true;
        if (verdict == "INCONCLUSIVE") inconclusive = true;
      };

      std::optional<GaussCode> left, right;
      try {
        left = find("interchange_left").code();
        right = find("interchange_right").code();
        const bool shape = left->component_count() == 3 && right->component_count() == 3 &&
                           left->crossing_count() == right->crossing_count();
        report.input(serialize(*left), *left);
        report.input(serialize(*right), *right);
        record(1, "validation", step_word(shape),
               {{"components", {left->component_count(), right->component_count()}},
                {"crossings", {left->crossing_count(), right->crossing_count()}}});
      } catch (const std::exception& e) {
        record(1, "validation", "FAIL", {{"error", e.what()}});
      }
      if (left && right) {
        try {
          const auto ia = is_crossing_irreducible(*left, opt.cap);
          const auto ib = is_crossing_irreducible(*right, opt.cap);
          record(2, "crossing-irreducible", step_word(ia.irreducible && ib.irreducible),
                 {{"left", ia.irreducible}, {"right", ib.irreducible}});
        } catch (const InconclusiveError& e) {
          record(2, "crossing-irreducible", "INCONCLUSIVE", {{"error", e.what()}});
        }

        const auto oa = type3_orbit(*left, opt.cap);
        const auto ob = type3_orbit(*right, opt.cap);
        bool disjoint = true;
        for (const auto& m : ob.members) disjoint = disjoint && !oa.contains(m);
        const bool orbits_ok = oa.exhausted && ob.exhausted && oa.members.size() == 2 &&
                               ob.members.size() == 2 && disjoint;
        record(3, "Type 3 orbits", step_word(orbits_ok),
               {{"left", to_json(oa)}, {"right", to_json(ob)}, {"disjoint", disjoint}});
        for (const auto& m : oa.members) text << "  left orbit:  " << m.text() << '\n';
        for (const auto& m : ob.members) text << "  right orbit: " << m.text() << '\n';

        try {
          const auto ca = classify(*left, opt.cap);
          const auto cb = classify(*right, opt.cap);
          auto flagged = [](const ClassReport& r) {
            for (const auto& p : r.parallel.pairs) {
              if (p.first == 1 && p.second == 2) return p.level;
            }
            return ParallelLevel::none_detected;
          };
          const auto la = flagged(ca);
          const auto lb = flagged(cb);
          const bool ok = la != ParallelLevel::none_detected && lb != ParallelLevel::none_detected;
          record(4, "parallel flag on components 1, 2", step_word(ok),
                 {{"left", to_json(ca)},
                  {"right", to_json(cb)},
                  {"explanation",
                   "the second and third loops are disjoint and flagged parallel, so the "
                   "uniqueness statement for connected non-parallel strings does not apply and "
                   "disjoint orbits do not separate the two classes"}});
          text << "  components 1, 2: " << to_string(la) << " / " << to_string(lb) << '\n';
        } catch (const InconclusiveError& e) {
          record(4, "parallel flag on components 1, 2", "INCONCLUSIVE", {{"error", e.what()}});
        }

        if (witness) {
          const auto lim = limits_for(budget_for(left->crossing_count(), budget, extra.value_or(2)));
          const auto v = equivalent_bounded(*left, *right, lim);
          std::string verdict = "INCONCLUSIVE";
          if (v.status == EquivalenceStatus::equivalent_with_witness) {
            verdict = step_word(replay(v.from, v.witness) == v.to);
          } else if (v.status == EquivalenceStatus::distinct_orbits_at_minimum) {
            verdict = "FAIL";
          }
          record(5, "witness search", verdict, to_json(v));
          text << "  " << to_string(v.status) << " at budget " << v.budget << " ("
               << v.stop_reason << ", " << v.states_explored << " states)\n";
          for (const auto& m : v.witness) text << "  " << describe(m) << '\n';
        }
      }
      result["passed"] = !failed && !inconclusive;
      if (failed) {
        code = kCheckFailed;
      } else if (inconclusive && opt.strict) {
        code = kInconclusive;
      }
    } else if (sub == draw) {
      const auto c = parse_code(code_a);
      // Drawings are emitted raw in both formats.
      out << (draw_format == "svg" ? to_svg(c) : to_dot(c));
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InconclusiveError& e) {
    result["status"] = "inconclusive";
    result["error"] = e.what();
    text << "inconclusive: " << e.what() << '\n';
    report.emit(out);
    return kInconclusive;
  }
  report.emit(out);
  return code;
}

}  // namespace flatstring::cli
