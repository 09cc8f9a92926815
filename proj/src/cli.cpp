#include "delorder/cli.hpp"

#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "delorder/artinian.hpp"
#include "delorder/bruhat.hpp"
#include "delorder/cayley.hpp"
#include "delorder/coxeter_system.hpp"
#include "delorder/deletion.hpp"
#include "delorder/duality.hpp"
#include "delorder/errors.hpp"
#include "delorder/normal_form.hpp"

namespace delorder {

namespace {

/// A loaded system plus the letter relabelling implied by --order: internal
/// generator k plays the role of original generator to_old[k-1], so words
/// cross the boundary through to_internal / word_out.
struct SystemContext {
  CoxeterSystem sys;
  std::vector<int> to_old;
  std::vector<int> to_new;
  bool relabelled = false;
};

std::vector<int> parse_order_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("--order expects comma-separated generator indices, got \"" + text +
                       "\"");
    }
  }
  if (out.empty()) throw InputError("--order must not be empty");
  return out;
}

SystemContext load_system(const std::string& spec, const std::string& order_text) {
  CoxeterSystem base = CoxeterSystem::from_spec(spec);
  int rank = base.rank();
  if (order_text.empty()) {
    SystemContext ctx{std::move(base), {}, {}, false};
    ctx.to_old.resize(static_cast<std::size_t>(rank));
    ctx.to_new.resize(static_cast<std::size_t>(rank));
    std::iota(ctx.to_old.begin(), ctx.to_old.end(), 1);
    std::iota(ctx.to_new.begin(), ctx.to_new.end(), 1);
    return ctx;
  }
  std::vector<int> order = parse_order_list(order_text);
  CoxeterMatrix permuted = base.matrix().permuted(order);
  CoxeterSystem relabelled =
      CoxeterSystem::from_matrix(permuted, base.label() + " order=" + order_text);
  SystemContext ctx{std::move(relabelled), order, {}, true};
  ctx.to_new.resize(static_cast<std::size_t>(rank));
  for (int k = 1; k <= rank; ++k) {
    ctx.to_new[static_cast<std::size_t>(order[static_cast<std::size_t>(k - 1)] - 1)] = k;
  }
  return ctx;
}

Word to_internal(const SystemContext& ctx, const Word& user_word) {
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(user_word.size()));
  for (int a : user_word.letters()) {
    if (a > ctx.sys.rank()) {
      throw InputError("word uses generator s" + std::to_string(a) + " outside rank " +
                       std::to_string(ctx.sys.rank()));
    }
    letters.push_back(ctx.to_new[static_cast<std::size_t>(a - 1)]);
  }
  return Word(std::move(letters));
}

Word to_user(const SystemContext& ctx, const Word& internal_word) {
  if (!ctx.relabelled) return internal_word;
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(internal_word.size()));
  for (int a : internal_word.letters()) {
    letters.push_back(ctx.to_old[static_cast<std::size_t>(a - 1)]);
  }
  return Word(std::move(letters));
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open \"" + path + "\" for writing");
  f << content;
  if (!f) throw InputError("failed writing \"" + path + "\"");
}

void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << content;
  } else {
    write_text_file(out_path, content);
  }
}

nlohmann::json artinian_json(const SystemContext& ctx, const ArtinianReport& report) {
  nlohmann::json j;
  j["group"] = ctx.sys.label();
  j["finite"] = report.finite;
  j["irreducible"] = report.irreducible;
  nlohmann::json per = nlohmann::json::array();
  for (const auto& row : report.per_top) {
    nlohmann::json item;
    item["top"] = ctx.to_old[static_cast<std::size_t>(row.top_generator - 1)];
    item["parabolic_finite"] = row.parabolic_finite;
    per.push_back(std::move(item));
  }
  j["per_top"] = std::move(per);
  j["all_orders"] = report.all_orders;
  j["artinian_current_order"] = is_artinian(ctx.sys);
  j["classification"] = report.classification;
  return j;
}

void artinian_text(const SystemContext& ctx, const ArtinianReport& report, std::ostream& out) {
  out << "group: " << ctx.sys.label() << "\n";
  out << "finite: " << (report.finite ? "yes" : "no") << "\n";
  out << "irreducible: " << (report.irreducible ? "yes" : "no") << "\n";
  out << "artinian (current order, top s"
      << ctx.to_old[static_cast<std::size_t>(ctx.sys.rank() - 1)]
      << "): " << (is_artinian(ctx.sys) ? "yes" : "no") << "\n";
  out << "per top generator:\n";
  for (const auto& row : report.per_top) {
    out << "  top s" << ctx.to_old[static_cast<std::size_t>(row.top_generator - 1)]
        << ": parabolic finite: " << (row.parabolic_finite ? "yes" : "no") << "\n";
  }
  out << "artinian for all orders: " << (report.all_orders ? "yes" : "no") << "\n";
  out << "classification: " << report.classification << "\n";
}

nlohmann::json duality_json(const SystemContext& ctx, const DualityReport& report) {
  nlohmann::json j;
  j["group"] = report.group;
  j["size"] = report.size;
  j["longest_nf"] = to_user(ctx, report.longest_nf).str('s');
  j["expected_sum"] = report.size + 1;
  j["holds"] = report.holds;
  nlohmann::json defects = nlohmann::json::array();
  for (const auto& d : report.defects) {
    nlohmann::json item;
    item["w"] = to_user(ctx, d.w_nf).str('s');
    item["L_w"] = d.l_w;
    item["L_w0w"] = d.l_w0w;
    item["sum"] = d.sum;
    defects.push_back(std::move(item));
  }
  j["defects"] = std::move(defects);
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& c : report.coset_reps) {
    nlohmann::json item;
    item["nf"] = to_user(ctx, c.nf).str('s');
    item["length"] = c.length;
    item["L"] = c.label;
    reps.push_back(std::move(item));
  }
  j["coset_reps"] = std::move(reps);
  return j;
}

void duality_text(const SystemContext& ctx, const DualityReport& report, bool defects_only,
                  std::ostream& out) {
  const long expected = static_cast<long>(report.size) + 1;
  if (!defects_only) {
    out << "group: " << report.group << "\n";
    out << "elements: " << report.size << "\n";
    out << "longest element: " << to_user(ctx, report.longest_nf).str('s') << " (length "
        << report.longest_nf.size() << ")\n";
    out << "pairing L(w) + L(w0 w) = " << expected << ": "
        << (report.holds ? "holds for every w" : "fails") << "\n";
  }
  if (!report.holds) {
    std::size_t shown = defects_only ? report.defects.size()
                                     : std::min<std::size_t>(report.defects.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) {
      const auto& d = report.defects[i];
      out << "defect: w=" << to_user(ctx, d.w_nf).str('s') << " L(w)=" << d.l_w
          << " L(w0w)=" << d.l_w0w << " sum=" << d.sum << " expected=" << expected << "\n";
    }
    if (!defects_only && report.defects.size() > shown) {
      out << "(" << (report.defects.size() - shown) << " more defects)\n";
    }
  }
  if (!defects_only) {
    out << "minimal coset representatives over s1..s" << ctx.sys.rank() - 1
        << " (user labels):\n";
    for (const auto& c : report.coset_reps) {
      out << "  L(" << to_user(ctx, c.nf).str('s') << ") = " << c.label
          << "  length " << c.length << "\n";
    }
  }
}

LabelStrategy parse_strategy(const std::string& text) {
  if (text == "auto") return LabelStrategy::Auto;
  if (text == "graph") return LabelStrategy::Graph;
  if (text == "sort") return LabelStrategy::Sort;
  throw InputError("unknown strategy \"" + text + "\" (auto, graph, sort)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"deletion order on words and Coxeter group normal forms"};
  app.name("delorder");
  app.require_subcommand(0, 1);

  // compare
  auto* cmd_compare = app.add_subcommand("compare", "compare two words in the deletion order");
  std::string cmp_u;
  std::string cmp_v;
  int cmp_alphabet = 0;
  cmd_compare->add_option("u", cmp_u, "first word")->required();
  cmd_compare->add_option("v", cmp_v, "second word")->required();
  cmd_compare->add_option("-n,--alphabet", cmp_alphabet,
                          "alphabet size (default: largest letter used)");

  // nf
  auto* cmd_nf = app.add_subcommand("nf", "normal form of a group element");
  std::string nf_sys;
  std::string nf_word;
  std::string nf_order;
  int nf_cap = kDefaultReducedWordCap;
  cmd_nf->add_option("system", nf_sys, "preset name or matrix JSON file")->required();
  cmd_nf->add_option("word", nf_word, "word in the generators")->required();
  cmd_nf->add_option("--order", nf_order, "generator order, e.g. 3,1,2");
  cmd_nf->add_option("--cap-wordlen", nf_cap, "length cap for the reduced-word oracle");

  // order-table
  auto* cmd_table = app.add_subcommand("order-table", "CSV table of W in deletion order");
  std::string ot_sys;
  std::string ot_order;
  std::string ot_out;
  std::size_t ot_cap = kDefaultEnumerationCap;
  cmd_table->add_option("system", ot_sys, "preset name or matrix JSON file")->required();
  cmd_table->add_option("--order", ot_order, "generator order, e.g. 3,1,2");
  cmd_table->add_option("--out", ot_out, "write to file instead of stdout");
  cmd_table->add_option("--cap-elements", ot_cap, "enumeration cap");

  // label
  auto* cmd_label = app.add_subcommand("label", "run the successor labelling");
  std::string lb_sys;
  std::string lb_order;
  std::string lb_out;
  std::string lb_dot;
  std::size_t lb_cap = kDefaultEnumerationCap;
  cmd_label->add_option("system", lb_sys, "preset name or matrix JSON file")->required();
  cmd_label->add_option("--order", lb_order, "generator order, e.g. 3,1,2");
  cmd_label->add_option("--out", lb_out, "write the CSV table here");
  cmd_label->add_option("--dot", lb_dot, "write the Graphviz graph here");
  cmd_label->add_option("--cap-elements", lb_cap, "enumeration cap");

  // stream
  auto* cmd_stream = app.add_subcommand("stream", "emit elements in deletion order");
  std::string st_sys;
  std::string st_order;
  std::size_t st_count = 0;
  std::size_t st_cap = kDefaultEnumerationCap;
  cmd_stream->add_option("system", st_sys, "preset name or matrix JSON file")->required();
  cmd_stream->add_option("-n,--count", st_count, "how many elements to emit")->required();
  cmd_stream->add_option("--order", st_order, "generator order, e.g. 3,1,2");
  cmd_stream->add_option("--cap-elements", st_cap, "frontier cap");

  // bruhat
  auto* cmd_bruhat = app.add_subcommand("bruhat", "Bruhat comparison of two elements");
  std::string br_sys;
  std::string br_u;
  std::string br_v;
  std::string br_order;
  cmd_bruhat->add_option("system", br_sys, "preset name or matrix JSON file")->required();
  cmd_bruhat->add_option("u", br_u, "first element, as a word")->required();
  cmd_bruhat->add_option("v", br_v, "second element, as a word")->required();
  cmd_bruhat->add_option("--order", br_order, "generator order, e.g. 3,1,2");

  // artinian
  auto* cmd_artinian = app.add_subcommand("artinian", "Artinian verdicts per generator order");
  std::string ar_sys;
  std::string ar_order;
  std::string ar_format = "text";
  cmd_artinian->add_option("system", ar_sys, "preset name or matrix JSON file")->required();
  cmd_artinian->add_option("--order", ar_order, "generator order, e.g. 3,1,2");
  cmd_artinian->add_option("--format", ar_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // duality
  auto* cmd_duality = app.add_subcommand("duality", "check L(w) + L(w0 w) = |W| + 1");
  std::string du_sys;
  std::string du_order;
  std::string du_format = "text";
  std::string du_strategy = "auto";
  bool du_defects_only = false;
  int du_jobs = 1;
  cmd_duality->add_option("system", du_sys, "preset name or matrix JSON file")->required();
  cmd_duality->add_option("--order", du_order, "generator order, e.g. 3,1,2");
  cmd_duality->add_option("--format", du_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_duality->add_option("--strategy", du_strategy, "labelling strategy: auto, graph, sort");
  cmd_duality->add_flag("--defects-only", du_defects_only, "print only the defect lines");
  cmd_duality->add_option("--jobs", du_jobs, "worker threads for the defect scan");

  // export
  auto* cmd_export = app.add_subcommand("export", "export the labelled Cayley graph");
  std::string ex_sys;
  std::string ex_order;
  std::string ex_format;
  std::string ex_out;
  std::size_t ex_cap = kDefaultEnumerationCap;
  cmd_export->add_option("system", ex_sys, "preset name or matrix JSON file")->required();
  cmd_export->add_option("--format", ex_format, "dot, json or csv")
      ->required()
      ->check(CLI::IsMember({"dot", "json", "csv"}));
  cmd_export->add_option("--order", ex_order, "generator order, e.g. 3,1,2");
  cmd_export->add_option("--out", ex_out, "write to file instead of stdout");
  cmd_export->add_option("--cap-elements", ex_cap, "enumeration cap");

  try {
    std::vector<const char*> argv;
    argv.push_back("delorder");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_compare)) {
      Word u = Word::parse(cmp_u);
      Word v = Word::parse(cmp_v);
      if (cmp_alphabet != 0) {
        if (cmp_alphabet < 1) throw InputError("alphabet size must be >= 1");
        if (u.max_letter() > cmp_alphabet || v.max_letter() > cmp_alphabet) {
          throw InputError("word uses letters outside a_1..a_" + std::to_string(cmp_alphabet));
        }
      }
      out << to_string(compare_deletion(u, v)) << "\n";
    } else if (app.got_subcommand(cmd_nf)) {
      SystemContext ctx = load_system(nf_sys, nf_order);
      Element g = ctx.sys.from_word(to_internal(ctx, Word::parse(nf_word)));
      Word rlex = nf_rlex(ctx.sys, g);
      Word oracle = nf_delta_oracle(ctx.sys, g, nf_cap);
      out << "nf-rlex: " << to_user(ctx, rlex).str('s') << "\n";
      out << "nf-delta: " << to_user(ctx, oracle).str('s') << "\n";
      out << "length: " << rlex.size() << "\n";
      if (rlex != oracle) {
        throw InvariantError("greedy normal form disagrees with the deletion-least reduced word");
      }
    } else if (app.got_subcommand(cmd_table)) {
      SystemContext ctx = load_system(ot_sys, ot_order);
      std::vector<Element> order =
          elements_in_deletion_order(ctx.sys, LabelStrategy::Auto, ot_cap);
      emit(table_csv(ctx.sys, order, &err), ot_out, out);
    } else if (app.got_subcommand(cmd_label)) {
      SystemContext ctx = load_system(lb_sys, lb_order);
      CayleyGraph graph = build_cayley(ctx.sys, lb_cap);
      Labeling labeling = successor_label(graph);
      std::vector<Element> order;
      order.reserve(graph.size());
      for (int v : labeling.order) order.push_back(graph.vertices[static_cast<std::size_t>(v)]);
      if (lb_out.empty() && lb_dot.empty()) {
        out << table_csv(ctx.sys, order, &err);
      } else {
        if (!lb_out.empty()) {
          write_text_file(lb_out, table_csv(ctx.sys, order, &err));
          out << "wrote table to " << lb_out << "\n";
        }
        if (!lb_dot.empty()) {
          write_text_file(lb_dot, export_dot(ctx.sys, graph, labeling));
          out << "wrote graph to " << lb_dot << "\n";
        }
        out << "labelled " << graph.size() << " elements of " << ctx.sys.label() << "\n";
      }
    } else if (app.got_subcommand(cmd_stream)) {
      SystemContext ctx = load_system(st_sys, st_order);
      for (const Element& g : stream_in_deletion_order(ctx.sys, st_count, st_cap)) {
        out << to_user(ctx, nf_rlex(ctx.sys, g)).str('s') << "\n";
      }
    } else if (app.got_subcommand(cmd_bruhat)) {
      SystemContext ctx = load_system(br_sys, br_order);
      Element u = ctx.sys.from_word(to_internal(ctx, Word::parse(br_u)));
      Element v = ctx.sys.from_word(to_internal(ctx, Word::parse(br_v)));
      out << to_string(bruhat_compare(ctx.sys, u, v)) << "\n";
    } else if (app.got_subcommand(cmd_artinian)) {
      SystemContext ctx = load_system(ar_sys, ar_order);
      ArtinianReport report = artinian_all_orders(ctx.sys);
      if (ar_format == "json") {
        out << artinian_json(ctx, report).dump(2) << "\n";
      } else {
        artinian_text(ctx, report, out);
      }
    } else if (app.got_subcommand(cmd_duality)) {
      SystemContext ctx = load_system(du_sys, du_order);
      DualityReport report =
          duality_report(ctx.sys, parse_strategy(du_strategy), du_jobs);
      if (du_format == "json") {
        out << duality_json(ctx, report).dump(2) << "\n";
      } else {
        duality_text(ctx, report, du_defects_only, out);
      }
    } else if (app.got_subcommand(cmd_export)) {
      SystemContext ctx = load_system(ex_sys, ex_order);
      CayleyGraph graph = build_cayley(ctx.sys, ex_cap);
      Labeling labeling = successor_label(graph);
      if (ex_format == "csv") {
        std::vector<Element> order;
        order.reserve(graph.size());
        for (int v : labeling.order) order.push_back(graph.vertices[static_cast<std::size_t>(v)]);
        emit(table_csv(ctx.sys, order, &err), ex_out, out);
      } else if (ex_format == "dot") {
        emit(export_dot(ctx.sys, graph, labeling), ex_out, out);
      } else {
        emit(export_json(ctx.sys, graph, labeling), ex_out, out);
      }
    } else {
      out << app.help();
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvariantError& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 4;
  }
  return 0;
}

}  // namespace delorder
