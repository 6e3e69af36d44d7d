//
// cycred - cyclically reduced words in free groups
// Copyright (C) 2026 The cycred authors
//
// Licensed under the Apache License, Version 2.0.
//

#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycred/closure.hpp"
#include "cycred/error.hpp"
#include "cycred/identities.hpp"
#include "cycred/latin.hpp"
#include "cycred/reduction.hpp"
#include "cycred/structure.hpp"
#include "cycred/syntax.hpp"
#include "cycred/word.hpp"

namespace cycred::cli {

  namespace {

    using json = nlohmann::ordered_json;

    struct Context {
      WordSyntax  syntax = WordSyntax::compact;
      AlphabetPtr alphabet;

      std::string word(Word const& w) const {
        return format_word(w, syntax);
      }
    };

    AlphabetPtr alphabet_from_option(std::string const& list) {
      std::vector<std::string> names;
      std::stringstream        in(list);
      std::string              name;
      while (std::getline(in, name, ',')) {
        names.push_back(name);
      }
      return make_alphabet(std::move(names));
    }

    // --alphabet if given, otherwise inferred from the word arguments.
    AlphabetPtr resolve_alphabet(std::string const&              option,
                                 std::vector<std::string> const& texts,
                                 WordSyntax                      syntax) {
      if (!option.empty()) {
        return alphabet_from_option(option);
      }
      return infer_alphabet(texts, syntax);
    }

    json trace_json(CancellationTrace const& t) {
      json events = json::array();
      for (auto const& e : t.events) {
        events.push_back({e.left_pos,
                          e.right_pos,
                          e.kind == CancellationKind::internal ? "internal"
                                                               : "external"});
      }
      return events;
    }

    json h_json(Context const& ctx, HElement const& h) {
      json terms = json::array();
      for (auto const& t : h.terms) {
        terms.push_back({ctx.word(t.conjugator), ctx.word(t.relator)});
      }
      return terms;
    }

    json op_json(CollapseOp const& op) {
      if (auto const* a = std::get_if<ExchangeA>(&op)) {
        return {{"type", "exchangeA"}, {"pos", a->pos}};
      }
      if (auto const* b = std::get_if<ExchangeB>(&op)) {
        return {{"type", "exchangeB"}, {"pos", b->pos}};
      }
      auto const& d = std::get<Deletion>(op);
      return {{"type", "deletion"}, {"pos", d.pos}, {"kind", to_string(d.kind)}};
    }

    DeletionKind parse_kind(std::string const& name) {
      for (auto k : {DeletionKind::general,
                     DeletionKind::semi_peiffer,
                     DeletionKind::peiffer}) {
        if (name == to_string(k)) {
          return k;
        }
      }
      throw ParseError(0, "unknown deletion kind \"" + name + "\"");
    }

    CollapseOp parse_op(json const& j) {
      if (!j.is_object() || !j.contains("type") || !j.contains("pos")
          || !j["type"].is_string() || !j["pos"].is_number_unsigned()) {
        throw ParseError(0, "op needs a string \"type\" and an unsigned \"pos\"");
      }
      auto const type = j["type"].get<std::string>();
      auto const pos  = j["pos"].get<std::size_t>();
      if (type == "exchangeA") {
        return ExchangeA{pos};
      }
      if (type == "exchangeB") {
        return ExchangeB{pos};
      }
      if (type == "deletion") {
        auto const kind = j.value("kind", std::string("general"));
        return Deletion{pos, parse_kind(kind)};
      }
      throw ParseError(0, "unknown op type \"" + type + "\"");
    }

    CancelPolicy parse_policy(std::string const& name) {
      static std::pair<char const*, CancelPolicy> const names[] = {
          {"internal-first", CancelPolicy::internal_first},
          {"internal-last", CancelPolicy::internal_last},
          {"external-first", CancelPolicy::external_first},
          {"alternating", CancelPolicy::alternating},
          {"random", CancelPolicy::seeded_random}};
      for (auto const& [n, p] : names) {
        if (name == n) {
          return p;
        }
      }
      throw ParseError(0, "unknown policy \"" + name + "\"");
    }

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw IoError("cannot open " + path);
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      return buffer.str();
    }

    void write_file(std::string const& path, std::string const& text) {
      std::ofstream out(path, std::ios::binary);
      out << text;
      if (!out) {
        throw IoError("cannot write " + path);
      }
    }

    std::vector<std::string> lines_of(std::string const& text) {
      std::vector<std::string> lines;
      std::stringstream        in(text);
      std::string              line;
      while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
          line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
          continue;
        }
        lines.push_back(line);
      }
      return lines;
    }

    void print(std::ostream& out, json const& doc, bool machine) {
      if (machine) {
        out << doc.dump(2) << '\n';
        return;
      }
      out << doc["command"].get<std::string>() << '\n';
      for (auto const& [section, body] : doc.items()) {
        if (section == "command" || !body.is_object()) {
          continue;
        }
        for (auto const& [key, value] : body.items()) {
          out << "  " << key << ": "
              << (value.is_string() ? value.get<std::string>() : value.dump())
              << '\n';
        }
      }
    }

    json shirv_json(Context const& ctx, ShirvCase const& c) {
      json j;
      j["case"] = case_number(c);
      std::visit(
          [&](auto const& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ShirvCase1>) {
              j["u1"] = ctx.word(x.u1);
              j["a"]  = ctx.word(x.a);
              j["s"]  = ctx.word(x.s);
            } else if constexpr (std::is_same_v<T, ShirvCase2>) {
              j["t"]  = ctx.word(x.t);
              j["c1"] = ctx.word(x.c1);
              j["c2"] = ctx.word(x.c2);
              j["a"]  = ctx.word(x.a);
            } else {
              j["v1"] = ctx.word(x.v1);
              j["s"]  = ctx.word(x.s);
              j["a"]  = ctx.word(x.a);
            }
          },
          c);
      return j;
    }

    json collapse_file_json(Context const&                 ctx,
                            HElement const&                h,
                            std::vector<CollapseOp> const& ops) {
      json j;
      j["alphabet"] = ctx.alphabet->names();
      j["syntax"]   = to_string(ctx.syntax);
      j["terms"]    = h_json(ctx, h);
      j["ops"]      = json::array();
      for (auto const& op : ops) {
        j["ops"].push_back(op_json(op));
      }
      return j;
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Reduction, cyclic reduction and related constructions on "
                 "words in free groups",
                 "cycred"};
    app.require_subcommand(1);
    app.fallthrough();

    bool        machine = false;
    std::string syntax_name{"compact"};
    std::string alphabet_option;
    app.add_flag("--json", machine, "Emit one JSON document");
    app.add_option("--syntax", syntax_name, "Word syntax: compact or spaced")
        ->check(CLI::IsMember({"compact", "spaced"}));
    app.add_option(
        "--alphabet", alphabet_option, "Comma-separated generator names");

    std::string w_text, u_text, v_text;
    auto*       reduce_cmd = app.add_subcommand("reduce", "Free reduction");
    reduce_cmd->add_option("W", w_text)->required();
    auto* cycreduce_cmd = app.add_subcommand(
        "cycreduce", "Cyclically reduced form and conjugator");
    cycreduce_cmd->add_option("W", w_text)->required();

    auto* prod_cmd = app.add_subcommand("prod", "Reduced product");
    auto* cprod_cmd
        = app.add_subcommand("cprod", "Cyclically reduced product u * v");
    auto* classify_cmd = app.add_subcommand(
        "classify", "Which of the three cancellation shapes u, v have");
    auto* puzo_cmd = app.add_subcommand(
        "puzo", "Witnesses that u * v is a rotation of v * u");
    for (auto* cmd : {prod_cmd, cprod_cmd, classify_cmd, puzo_cmd}) {
      cmd->add_option("U", u_text)->required();
      cmd->add_option("V", v_text)->required();
    }
    std::string emit_collapse;
    puzo_cmd->add_option("--emit-collapse",
                         emit_collapse,
                         "Write the collapse element and schedule as JSON");

    std::string   policy_name{"internal-first"};
    std::uint64_t seed = 0;
    auto*         anyorder_cmd
        = app.add_subcommand("anyorder", "Cancel pairs in a chosen order");
    anyorder_cmd->add_option("W", w_text)->required();
    anyorder_cmd
        ->add_option("--policy",
                     policy_name,
                     "internal-first, internal-last, external-first, "
                     "alternating or random")
        ->check(CLI::IsMember({"internal-first",
                               "internal-last",
                               "external-first",
                               "alternating",
                               "random"}));
    anyorder_cmd->add_option("--seed", seed, "Seed for the random policy");

    std::size_t count = 5;
    auto*       latin_cmd
        = app.add_subcommand("latin", "Solutions of u * v = w up to rotation");
    latin_cmd->add_option("U", u_text)->required();
    latin_cmd->add_option("W", w_text)->required();
    latin_cmd->add_option("--count", count, "Number of pairs")
        ->check(CLI::PositiveNumber);

    std::string collapse_path;
    auto*       collapse_cmd = app.add_subcommand(
        "collapse", "Execute an operation list on an H element");
    collapse_cmd->add_option("--file", collapse_path)->required();

    std::string relators_path, out_path;
    std::size_t max_len = 4, rounds = 16, workers = 1;
    bool        no_inverses = false, no_canonical = false;
    auto*       closure_cmd = app.add_subcommand(
        "closure", "Enumerate the closure of a relator set up to a length");
    closure_cmd->add_option("--relators", relators_path)->required();
    closure_cmd->add_option("--maxlen", max_len)->check(CLI::PositiveNumber);
    closure_cmd->add_option("--rounds", rounds)->check(CLI::PositiveNumber);
    closure_cmd->add_flag("--no-inverses", no_inverses);
    closure_cmd->add_flag("--no-canonical", no_canonical);
    closure_cmd->add_option("--workers", workers)->check(CLI::PositiveNumber);
    closure_cmd->add_option("--out", out_path)->required();

    std::string set_path;
    auto*       query_cmd = app.add_subcommand(
        "closure-query", "Membership in a saved closure set");
    query_cmd->add_option("--set", set_path)->required();
    query_cmd->add_option("W", w_text)->required();

    std::vector<char const*> argv{"cycred"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return ok;
    } catch (CLI::ParseError const& e) {
      err << "cycred: " << e.what() << '\n';
      return bad_input;
    }

    json doc;
    int  status = ok;
    try {
      Context ctx;
      ctx.syntax = parse_syntax(syntax_name);
      auto const word_of
          = [&](std::string const& text) { return parse_word(text, ctx.alphabet, ctx.syntax); };
      auto* const cmd = app.get_subcommands().front();
      doc["command"]  = cmd->get_name();

      if (cmd == reduce_cmd || cmd == cycreduce_cmd || cmd == anyorder_cmd) {
        ctx.alphabet = resolve_alphabet(alphabet_option, {w_text}, ctx.syntax);
        Word const w = word_of(w_text);
        doc["inputs"]["w"] = ctx.word(w);
        if (cmd == reduce_cmd) {
          auto const r         = reduce(w);
          doc["outputs"]["word"] = ctx.word(r.word);
          doc["traces"]["trace"]  = trace_json(r.trace);
        } else if (cmd == cycreduce_cmd) {
          auto const r = cyc_reduce(w);
          doc["outputs"]["core"]       = ctx.word(r.decomposition.core);
          doc["outputs"]["conjugator"] = ctx.word(r.decomposition.conjugator);
          doc["traces"]["trace"]       = trace_json(r.trace);
        } else {
          auto const policy = parse_policy(policy_name);
          doc["inputs"]["policy"] = policy_name;
          doc["inputs"]["seed"]   = seed;
          auto const r      = cancel_any_order(w, Chooser{policy, seed});
          Word const core   = cyclically_reduced_form(w);
          auto const offset = cyclic_shift_between(core, r.word);
          doc["outputs"]["word"]     = ctx.word(r.word);
          doc["outputs"]["core"]     = ctx.word(core);
          doc["outputs"]["rotation"] = offset ? json(*offset) : json(nullptr);
          doc["traces"]["trace"]     = trace_json(r.trace);
        }
      } else if (cmd == prod_cmd || cmd == cprod_cmd || cmd == classify_cmd
                 || cmd == puzo_cmd) {
        ctx.alphabet
            = resolve_alphabet(alphabet_option, {u_text, v_text}, ctx.syntax);
        Word const u = word_of(u_text);
        Word const v = word_of(v_text);
        doc["inputs"]["u"] = ctx.word(u);
        doc["inputs"]["v"] = ctx.word(v);
        if (cmd == prod_cmd) {
          doc["outputs"]["product"] = ctx.word(reduced_product(u, v));
        } else if (cmd == cprod_cmd) {
          doc["outputs"]["product"] = ctx.word(cyc_product(u, v));
        } else if (cmd == classify_cmd) {
          auto const c = classify_shirv(u, v);
          doc["witnesses"] = shirv_json(ctx, c);
        } else {
          auto const r = puzo_witness(u, v);
          auto&      o = doc["outputs"];
          o["uv_product"]       = ctx.word(r.uv_product);
          o["vu_product"]       = ctx.word(r.vu_product);
          o["shift"]            = r.shift;
          o["shirv_case"]       = r.shirv_case;
          o["rotated_residual"] = ctx.word(r.rotated_residual);
          auto& w               = doc["witnesses"];
          w["identity"]         = h_json(ctx, r.identity);
          w["perm_terms"]       = r.perm_terms;
          w["all_terms_cyclic"] = r.all_terms_cyclic;
          auto const& in        = r.collapse_input;
          w["collapse_input"]   = {{"alpha", ctx.word(in.alpha)},
                                   {"beta", ctx.word(in.beta)},
                                   {"gamma", ctx.word(in.gamma)},
                                   {"delta", ctx.word(in.delta)},
                                   {"u", ctx.word(in.u)},
                                   {"v", ctx.word(in.v)},
                                   {"p", ctx.word(in.p)},
                                   {"q", ctx.word(in.q)},
                                   {"n", in.n}};
          w["schedule_length"]  = r.schedule.size();
          w["schedule"]         = json::array();
          for (auto const& op : r.schedule) {
            w["schedule"].push_back(op_json(op));
          }
          doc["traces"]["uv_trace"]      = trace_json(r.uv_trace);
          doc["traces"]["vu_trace"]      = trace_json(r.vu_trace);
          doc["traces"]["rotated_trace"] = trace_json(r.rotated_trace);
          if (!emit_collapse.empty()) {
            write_file(emit_collapse,
                       collapse_file_json(ctx,
                                          collapseh_element(in),
                                          r.schedule)
                               .dump(2)
                           + "\n");
          }
        }
      } else if (cmd == latin_cmd) {
        ctx.alphabet
            = resolve_alphabet(alphabet_option, {u_text, w_text}, ctx.syntax);
        Word const u = word_of(u_text);
        Word const w = word_of(w_text);
        doc["inputs"]["u"]     = ctx.word(u);
        doc["inputs"]["w"]     = ctx.word(w);
        doc["inputs"]["count"] = count;
        auto const sc   = stabilizing_conjugator(u, w);
        doc["witnesses"]["s"]    = ctx.word(sc.s);
        doc["witnesses"]["rule"] = to_string(sc.rule);
        if (sc.inner) {
          doc["witnesses"]["inner_rule"] = to_string(*sc.inner);
        }
        doc["witnesses"]["conjugator"] = ctx.word(latin_conjugator(u, w));
        json pairs = json::array();
        for (auto const& p : latin_pairs(u, w, count)) {
          pairs.push_back({{"n", p.n},
                           {"v", ctx.word(p.v)},
                           {"v_prime", ctx.word(p.v_prime)}});
        }
        doc["outputs"]["target"] = ctx.word(cyclically_reduced_form(w));
        doc["outputs"]["pairs"]  = std::move(pairs);
      } else if (cmd == collapse_cmd) {
        json input;
        try {
          input = json::parse(read_file(collapse_path));
        } catch (json::parse_error const& e) {
          throw ParseError(e.byte == 0 ? 0 : e.byte - 1, e.what());
        }
        if (!input.is_object() || !input.contains("terms")
            || !input["terms"].is_array()) {
          throw ParseError(0, "collapse file needs a \"terms\" array");
        }
        if (input.contains("syntax")) {
          ctx.syntax = parse_syntax(input["syntax"].get<std::string>());
        }
        std::vector<std::string> texts;
        for (auto const& t : input["terms"]) {
          if (!t.is_array() || t.size() != 2 || !t[0].is_string()
              || !t[1].is_string()) {
            throw ParseError(0, "each term must be [conjugator, relator]");
          }
          texts.push_back(t[0].get<std::string>());
          texts.push_back(t[1].get<std::string>());
        }
        if (input.contains("alphabet") && alphabet_option.empty()) {
          ctx.alphabet = make_alphabet(
              input["alphabet"].get<std::vector<std::string>>());
        } else {
          ctx.alphabet
              = resolve_alphabet(alphabet_option, texts, ctx.syntax);
        }
        std::vector<std::pair<Word, Word>> terms;
        for (std::size_t i = 0; i < texts.size(); i += 2) {
          terms.emplace_back(word_of(texts[i]), word_of(texts[i + 1]));
        }
        std::vector<CollapseOp> ops;
        for (auto const& j : input.value("ops", json::array())) {
          ops.push_back(parse_op(j));
        }
        HElement const h = h_from_product(terms);
        doc["inputs"]["terms"] = h_json(ctx, h);
        doc["inputs"]["ops"]   = ops.size();
        doc["outputs"]["psi"]  = ctx.word(psi(h));
        try {
          HElement const g           = execute(h, ops);
          doc["outputs"]["result"]  = h_json(ctx, g);
          doc["outputs"]["trivial"] = g.trivial();
          status                    = g.trivial() ? ok : failed;
        } catch (CollapseError const& e) {
          doc["outputs"]["trivial"]      = false;
          doc["outputs"]["failed_op"]    = e.index();
          doc["outputs"]["failure"]      = to_string(e.reason());
          doc["outputs"]["diagnostic"]   = e.what();
          status                         = failed;
        }
      } else if (cmd == closure_cmd) {
        auto const lines = lines_of(read_file(relators_path));
        if (lines.empty()) {
          throw PreconditionError("relator file has no relators");
        }
        ctx.alphabet = resolve_alphabet(alphabet_option, lines, ctx.syntax);
        std::vector<Word> relators;
        for (auto const& line : lines) {
          relators.push_back(word_of(line));
        }
        ClosureConfig config;
        config.max_len          = max_len;
        config.max_rounds       = rounds;
        config.include_inverses = !no_inverses;
        config.canonical_dedup  = !no_canonical;
        auto const S = cycred::run(
            cycred::seed(relators, ctx.alphabet, config), workers);
        std::ostringstream file;
        save(S, file);
        write_file(out_path, file.str());
        doc["inputs"]["relators"] = json::array();
        for (auto const& r : relators) {
          doc["inputs"]["relators"].push_back(ctx.word(r));
        }
        doc["inputs"]["max_len"]          = max_len;
        doc["inputs"]["max_rounds"]       = rounds;
        doc["inputs"]["include_inverses"] = config.include_inverses;
        doc["inputs"]["canonical_dedup"]  = config.canonical_dedup;
        doc["outputs"]["members"]         = S.members.size();
        doc["outputs"]["rounds_done"]     = S.rounds_done;
        doc["outputs"]["saturated"]       = S.saturated;
        doc["outputs"]["out"]             = out_path;
      } else if (cmd == query_cmd) {
        std::istringstream file(read_file(set_path));
        auto const         S = load(file);
        ctx.alphabet        = S.alphabet;
        Word const w        = word_of(w_text);
        auto const r        = contains(S, w);
        doc["inputs"]["w"]          = ctx.word(w);
        doc["outputs"]["member"]    = r.member;
        doc["outputs"]["beyond_cap"] = r.beyond_cap;
        doc["outputs"]["saturated"] = S.saturated;
        status                      = r.member ? ok : failed;
      }
    } catch (ParseError const& e) {
      err << "cycred: " << e.what() << '\n';
      return bad_input;
    } catch (IoError const& e) {
      err << "cycred: " << e.what() << '\n';
      return bad_input;
    } catch (Error const& e) {
      err << "cycred: " << e.what() << '\n';
      return failed;
    } catch (nlohmann::json::exception const& e) {
      err << "cycred: malformed collapse file: " << e.what() << '\n';
      return bad_input;
    }
    print(out, doc, machine);
    return status;
  }

}  // namespace cycred::cli
