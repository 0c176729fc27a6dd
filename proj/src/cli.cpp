#include "syt/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "syt/claims.hpp"
#include "syt/errors.hpp"
#include "syt/jdt.hpp"
#include "syt/orders.hpp"
#include "syt/poset_io.hpp"
#include "syt/rsk.hpp"
#include "syt/tableau_ops.hpp"
#include "syt/text_io.hpp"

namespace syt {

namespace {

FinitePoset build_order(const std::string& order, int n) {
  if (order == "weak") return weak_order_syt(n);
  if (order == "chain") return chain_poset(n);
  if (order == "chain-strip") return chain_strip_poset(n, 1);
  if (order == "chain-strip-2") return chain_strip_poset(n, 2);
  throw InvalidInput("unknown order \"" + order +
                     "\"; expected weak, chain, chain-strip, or chain-strip-2");
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open output file: " + path);
  file << text;
  if (!file) throw Error("cannot write output file: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

std::vector<std::string> split_ids(const std::string& csv) {
  std::vector<std::string> ids;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) ids.push_back(item);
  }
  return ids;
}

int run_verify(const std::string& only_csv, bool json, std::ostream& out, std::ostream& err) {
  std::optional<std::vector<std::string>> only;
  if (!only_csv.empty()) only = split_ids(only_csv);
  auto report = run_claims(only);

  bool all_pass = true;
  if (json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : report) {
      nlohmann::ordered_json item;
      item["claim_id"] = r.claim_id;
      item["status"] = r.pass ? "pass" : "fail";
      item["detail"] = r.detail;
      item["witnesses"] = r.witnesses;
      item["elapsed_ms"] = r.elapsed_ms;
      arr.push_back(std::move(item));
      all_pass = all_pass && r.pass;
    }
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& r : report) {
      out << r.claim_id << " " << (r.pass ? "pass" : "fail") << " "
          << std::fixed << std::setprecision(1) << r.elapsed_ms << "ms\n";
      if (!r.pass) {
        err << r.claim_id << ": " << r.detail << "\n";
        for (const auto& w : r.witnesses) err << "  " << w << "\n";
        all_pass = false;
      }
    }
  }
  return all_pass ? 0 : 1;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"standard Young tableau orders"};
  app.name("syt");
  app.require_subcommand(1);

  // enum
  auto* cmd_enum = app.add_subcommand("enum", "list SYT_n in canonical order");
  int enum_n = 0;
  std::string enum_shape;
  cmd_enum->add_option("N", enum_n, "number of cells")->required();
  cmd_enum->add_option("--shape", enum_shape, "restrict to one shape, e.g. 3,2,1");

  // single-tableau commands
  auto* cmd_rsk = app.add_subcommand("rsk", "insertion and recording tableaux of a word");
  std::string rsk_perm;
  cmd_rsk->add_option("PERM", rsk_perm, "permutation word")->required();

  std::string word_tab;
  auto* cmd_word = app.add_subcommand("word", "row word of a tableau");
  cmd_word->add_option("TABLEAU", word_tab)->required();

  std::string shs_tab;
  auto* cmd_shs = app.add_subcommand("shs", "horizontal-strip growth sequence");
  cmd_shs->add_option("TABLEAU", shs_tab)->required();

  std::string des_tab;
  auto* cmd_des = app.add_subcommand("des", "descent set");
  cmd_des->add_option("TABLEAU", des_tab)->required();

  std::string restrict_tab;
  int restrict_i = 0, restrict_j = 0;
  auto* cmd_restrict = app.add_subcommand("restrict", "rectified interval restriction T_[I,J]");
  cmd_restrict->add_option("TABLEAU", restrict_tab)->required();
  cmd_restrict->add_option("I", restrict_i)->required();
  cmd_restrict->add_option("J", restrict_j)->required();

  std::string transpose_tab;
  auto* cmd_transpose = app.add_subcommand("transpose", "reflect along the main diagonal");
  cmd_transpose->add_option("TABLEAU", transpose_tab)->required();

  std::string evac_tab;
  auto* cmd_evac = app.add_subcommand("evac", "evacuation image");
  cmd_evac->add_option("TABLEAU", evac_tab)->required();

  // order-build
  auto* cmd_build = app.add_subcommand("order-build", "construct an order on SYT_n as JSON");
  std::string build_order_name, build_out;
  int build_n = 0;
  bool build_covers = false, build_full = false;
  cmd_build->add_option("ORDER", build_order_name, "weak | chain | chain-strip | chain-strip-2")
      ->required();
  cmd_build->add_option("N", build_n)->required();
  cmd_build->add_option("--out", build_out, "write to a file instead of stdout");
  auto* covers_flag = cmd_build->add_flag("--covers", build_covers, "covers only (default)");
  cmd_build->add_flag("--full", build_full, "also include all comparabilities")
      ->excludes(covers_flag);

  // order-diff
  auto* cmd_diff = app.add_subcommand("order-diff", "compare two order files");
  std::string diff_a, diff_b;
  cmd_diff->add_option("FILE1", diff_a)->required();
  cmd_diff->add_option("FILE2", diff_b)->required();

  // product
  auto* cmd_product = app.add_subcommand("product", "tableau product as a tableau list");
  std::string product_s, product_t;
  cmd_product->add_option("S", product_s)->required();
  cmd_product->add_option("T", product_t)->required();

  // hasse
  auto* cmd_hasse = app.add_subcommand("hasse", "Hasse diagram of an order in DOT format");
  std::string hasse_order, hasse_dot;
  int hasse_n = 0;
  cmd_hasse->add_option("ORDER", hasse_order, "weak | chain | chain-strip | chain-strip-2")
      ->required();
  cmd_hasse->add_option("N", hasse_n)->required();
  cmd_hasse->add_option("--dot", hasse_dot, "write to a file instead of stdout");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run the claim checks");
  std::string verify_only;
  bool verify_json = false;
  cmd_verify->add_option("--only", verify_only, "comma-separated claim ids");
  cmd_verify->add_flag("--json", verify_json, "emit a JSON report");

  // CLI11 consumes the argument vector in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (cmd_enum->parsed()) {
    std::vector<StandardTableau> tabs;
    if (enum_shape.empty()) {
      tabs = enumerate_syt(enum_n);
    } else {
      Partition shape = parse_partition(enum_shape);
      if (shape.weight() != enum_n)
        throw InvalidInput("shape " + to_string(shape) + " has weight " +
                           std::to_string(shape.weight()) + ", not " + std::to_string(enum_n));
      tabs = enumerate_syt(shape);
    }
    for (const auto& t : tabs) out << to_string(t) << "\n";
    return 0;
  }
  if (cmd_rsk->parsed()) {
    RskPair pq = rsk(parse_permutation(rsk_perm));
    out << to_string(pq.p) << "\n" << to_string(pq.q) << "\n";
    return 0;
  }
  if (cmd_word->parsed()) {
    out << to_string(row_word(parse_tableau(word_tab))) << "\n";
    return 0;
  }
  if (cmd_shs->parsed()) {
    out << to_string(shs(parse_tableau(shs_tab))) << "\n";
    return 0;
  }
  if (cmd_des->parsed()) {
    out << to_string(descent_set(parse_tableau(des_tab))) << "\n";
    return 0;
  }
  if (cmd_restrict->parsed()) {
    out << to_string(restrict_tableau(parse_tableau(restrict_tab), restrict_i, restrict_j))
        << "\n";
    return 0;
  }
  if (cmd_transpose->parsed()) {
    out << to_string(transpose(parse_tableau(transpose_tab))) << "\n";
    return 0;
  }
  if (cmd_evac->parsed()) {
    out << to_string(evacuate(parse_tableau(evac_tab))) << "\n";
    return 0;
  }
  if (cmd_build->parsed()) {
    FinitePoset p = build_order(build_order_name, build_n);
    write_output(poset_to_json(p, build_order_name, build_n, build_full), build_out, out);
    return 0;
  }
  if (cmd_diff->parsed()) {
    LoadedPoset a = poset_from_json(read_file(diff_a));
    LoadedPoset b = poset_from_json(read_file(diff_b));
    auto [only_a, only_b] = poset_diff(a.poset, b.poset);
    for (const auto& e : only_a) {
      out << "< " << a.poset.elements()[static_cast<std::size_t>(e.first)] << " <= "
          << a.poset.elements()[static_cast<std::size_t>(e.second)] << "\n";
    }
    for (const auto& e : only_b) {
      out << "> " << b.poset.elements()[static_cast<std::size_t>(e.first)] << " <= "
          << b.poset.elements()[static_cast<std::size_t>(e.second)] << "\n";
    }
    return 0;
  }
  if (cmd_product->parsed()) {
    for (const auto& t : pr_product(parse_tableau(product_s), parse_tableau(product_t)))
      out << to_string(t) << "\n";
    return 0;
  }
  if (cmd_hasse->parsed()) {
    FinitePoset p = build_order(hasse_order, hasse_n);
    write_output(poset_to_dot(p, hasse_order), hasse_dot, out);
    return 0;
  }
  if (cmd_verify->parsed()) {
    return run_verify(verify_only, verify_json, out, err);
  }
  err << "no subcommand given\n";
  return 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace syt
