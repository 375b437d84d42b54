// Command-line front end. Talks to the library only through combi/combi.h.
//
// Exit codes: 0 success, 2 usage or parse error, 3 overflow or exceeded
// bound, 1 internal error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "combi/combi.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;
constexpr int kExitInternal = 1;

struct CommandError {
  int code;
  std::string message;
};

int exit_code_for(combi_status s) {
  switch (s) {
    case COMBI_OK: return 0;
    case COMBI_ERR_INVALID_ARGUMENT: return kExitUsage;
    case COMBI_ERR_BOUND_EXCEEDED:
    case COMBI_ERR_OVERFLOW: return kExitLimit;
    default: return kExitInternal;
  }
}

void check(combi_status s, const std::string& context = {}) {
  if (s == COMBI_OK) return;
  std::string msg = combi_last_error();
  throw CommandError{exit_code_for(s), context.empty() ? msg : context + ": " + msg};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using PartitionPtr = std::unique_ptr<combi_partition, Deleter<combi_partition, combi_partition_free>>;
using ListPtr = std::unique_ptr<combi_seq_list, Deleter<combi_seq_list, combi_seq_list_free>>;
using ExpansionPtr = std::unique_ptr<combi_expansion, Deleter<combi_expansion, combi_expansion_free>>;
using TablePtr = std::unique_ptr<combi_char_table, Deleter<combi_char_table, combi_char_table_free>>;

PartitionPtr parse_partition(const std::string& text, const std::string& flag) {
  combi_partition* p = nullptr;
  check(combi_partition_parse(text.c_str(), &p), flag);
  return PartitionPtr(p);
}

std::vector<int> parse_word(const std::string& text, const std::string& name) {
  combi_seq_list* raw = nullptr;
  check(combi_word_parse(text.c_str(), &raw), name);
  ListPtr list(raw);
  std::size_t len = 0;
  const int* data = combi_seq_list_at(list.get(), 0, &len);
  return std::vector<int>(data, data + len);
}

std::string join(const int* data, std::size_t len) {
  std::string out;
  for (std::size_t i = 0; i < len; ++i) {
    if (i) out += ',';
    out += std::to_string(data[i]);
  }
  return out;
}

std::vector<std::vector<int>> items(const combi_seq_list* list) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < combi_seq_list_count(list); ++i) {
    std::size_t len = 0;
    const int* data = combi_seq_list_at(list, i, &len);
    out.emplace_back(data, data + len);
  }
  return out;
}

void print_lines(const combi_seq_list* list) {
  for (const auto& item : items(list)) std::cout << join(item.data(), item.size()) << '\n';
}

void print_expansion(const combi_expansion* e, bool json) {
  if (json) {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < combi_expansion_count(e); ++i) {
      std::size_t len = 0;
      const int* key = combi_expansion_key(e, i, &len);
      obj[join(key, len)] = combi_expansion_coeff(e, i);
    }
    std::cout << obj.dump() << '\n';
    return;
  }
  for (std::size_t i = 0; i < combi_expansion_count(e); ++i) {
    std::size_t len = 0;
    const int* key = combi_expansion_key(e, i, &len);
    std::cout << join(key, len) << ' ' << combi_expansion_coeff(e, i) << '\n';
  }
}

struct ShapeTriple {
  std::string outer;
  std::string inner;
  std::string mu;

  void bind(CLI::App* cmd) {
    cmd->add_option("--outer", outer, "outer shape, e.g. 7,5,4,2")->required();
    cmd->add_option("--inner", inner, "inner shape")->required();
    cmd->add_option("--mu", mu, "content partition")->required();
  }
};

int64_t run_lrcoef(const ShapeTriple& t) {
  auto outer = parse_partition(t.outer, "--outer");
  auto inner = parse_partition(t.inner, "--inner");
  auto mu = parse_partition(t.mu, "--mu");
  int64_t value = 0;
  check(combi_lr_coeff(outer.get(), inner.get(), mu.get(), &value));
  return value;
}

int run(int argc, char** argv) {
  CLI::App app{"Partitions, tableaux, Littlewood-Richardson coefficients and symmetric group characters"};
  app.require_subcommand(1);

  ShapeTriple lrcoef_args;
  auto* lrcoef = app.add_subcommand("lrcoef", "Littlewood-Richardson coefficient C^outer_{inner,mu}");
  lrcoef_args.bind(lrcoef);

  ShapeTriple lrtab_args;
  auto* lrtab = app.add_subcommand("lr-tableaux", "Reading words of the LR tableaux, one per line");
  lrtab_args.bind(lrtab);

  std::string mult_la, mult_mu;
  bool mult_json = false;
  unsigned mult_threads = 1;
  auto* mult = app.add_subcommand("schur-mult", "Expand s_LA * s_MU in the Schur basis");
  mult->add_option("LA", mult_la)->required();
  mult->add_option("MU", mult_mu)->required();
  mult->add_flag("--json", mult_json);
  mult->add_option("--threads", mult_threads, "worker threads")->check(CLI::Range(1u, 256u));

  std::string pieri_la;
  int pieri_k = 0;
  bool pieri_col = false;
  bool pieri_json = false;
  auto* pieri = app.add_subcommand("pieri", "s_LA * s_(K), or s_LA * s_(1^K) with --col");
  pieri->add_option("LA", pieri_la)->required();
  pieri->add_option("K", pieri_k)->required()->check(CLI::NonNegativeNumber);
  pieri->add_flag("--col", pieri_col);
  pieri->add_flag("--json", pieri_json);

  std::string rs_word;
  bool rs_json = false;
  auto* rs = app.add_subcommand("rs", "Robinson-Schensted insertion and recording tableaux");
  rs->add_option("WORD", rs_word)->required();
  rs->add_flag("--json", rs_json);

  std::string nf_word;
  auto* nf = app.add_subcommand("plactic-nf", "Plactic normal form (row reading of P)");
  nf->add_option("WORD", nf_word)->required();

  std::string eq_u, eq_v;
  auto* eq = app.add_subcommand("plactic-eq", "Whether two words are plactic-equivalent");
  eq->add_option("U", eq_u)->required();
  eq->add_option("V", eq_v)->required();

  std::string char_lambda, char_mu;
  auto* chr = app.add_subcommand("char", "Irreducible character value chi^lambda(mu)");
  chr->add_option("--lambda", char_lambda)->required();
  chr->add_option("--mu", char_mu)->required();

  int table_n = 0;
  bool table_json = false;
  auto* table = app.add_subcommand("char-table", "Character table of the symmetric group S_N");
  table->add_option("N", table_n)->required();
  table->add_flag("--json", table_json);

  std::string syt_la;
  auto* syt = app.add_subcommand("count-syt", "Number of standard tableaux of shape LA");
  syt->add_option("LA", syt_la)->required();

  std::string yam_mu;
  auto* yam = app.add_subcommand("yam", "Yamanouchi words of evaluation MU");
  yam->add_option("MU", yam_mu)->required();

  std::string kostka_la, kostka_mu;
  auto* kostka = app.add_subcommand("kostka", "Kostka number K_{LA,MU}");
  kostka->add_option("LA", kostka_la)->required();
  kostka->add_option("MU", kostka_mu)->required();

  auto* bench = app.add_subcommand("bench", "Time a computation");
  bench->require_subcommand(1);
  ShapeTriple bench_args;
  int bench_repeat = 5;
  auto* bench_lr = bench->add_subcommand("lrcoef", "Time lrcoef");
  bench_args.bind(bench_lr);
  bench_lr->add_option("--repeat", bench_repeat, "number of runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (lrcoef->parsed()) {
    std::cout << run_lrcoef(lrcoef_args) << '\n';
  } else if (lrtab->parsed()) {
    auto outer = parse_partition(lrtab_args.outer, "--outer");
    auto inner = parse_partition(lrtab_args.inner, "--inner");
    auto mu = parse_partition(lrtab_args.mu, "--mu");
    combi_seq_list* raw = nullptr;
    check(combi_lr_tableaux(outer.get(), inner.get(), mu.get(), &raw));
    ListPtr list(raw);
    print_lines(list.get());
  } else if (mult->parsed()) {
    auto la = parse_partition(mult_la, "LA");
    auto mu = parse_partition(mult_mu, "MU");
    combi_expansion* raw = nullptr;
    check(combi_schur_product(la.get(), mu.get(), mult_threads, &raw));
    ExpansionPtr e(raw);
    print_expansion(e.get(), mult_json);
  } else if (pieri->parsed()) {
    auto la = parse_partition(pieri_la, "LA");
    combi_expansion* raw = nullptr;
    check(combi_pieri(la.get(), pieri_k, pieri_col ? 1 : 0, &raw));
    ExpansionPtr e(raw);
    print_expansion(e.get(), pieri_json);
  } else if (rs->parsed()) {
    auto w = parse_word(rs_word, "WORD");
    combi_seq_list* p_raw = nullptr;
    combi_seq_list* q_raw = nullptr;
    check(combi_rs(w.data(), w.size(), &p_raw, &q_raw));
    ListPtr p(p_raw);
    ListPtr q(q_raw);
    if (rs_json) {
      ordered_json obj;
      obj["P"] = items(p.get());
      obj["Q"] = items(q.get());
      std::cout << obj.dump() << '\n';
    } else {
      std::cout << "P\n";
      print_lines(p.get());
      std::cout << "Q\n";
      print_lines(q.get());
    }
  } else if (nf->parsed()) {
    auto w = parse_word(nf_word, "WORD");
    combi_seq_list* raw = nullptr;
    check(combi_plactic_normal_form(w.data(), w.size(), &raw));
    ListPtr list(raw);
    print_lines(list.get());
  } else if (eq->parsed()) {
    auto u = parse_word(eq_u, "U");
    auto v = parse_word(eq_v, "V");
    int same = 0;
    check(combi_plactic_equiv(u.data(), u.size(), v.data(), v.size(), &same));
    std::cout << (same ? "true" : "false") << '\n';
  } else if (chr->parsed()) {
    auto la = parse_partition(char_lambda, "--lambda");
    auto mu = parse_partition(char_mu, "--mu");
    int64_t value = 0;
    check(combi_mn_coeff(la.get(), mu.get(), &value));
    std::cout << value << '\n';
  } else if (table->parsed()) {
    combi_char_table* raw = nullptr;
    check(combi_char_table_new(table_n, &raw), "N");
    TablePtr t(raw);
    const std::size_t dim = combi_char_table_dim(t.get());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dim; ++i) {
      std::size_t len = 0;
      const int* data = combi_char_table_label(t.get(), i, &len);
      labels.push_back(join(data, len));
    }
    if (table_json) {
      ordered_json obj = ordered_json::object();
      for (std::size_t i = 0; i < dim; ++i) {
        ordered_json row = ordered_json::object();
        for (std::size_t j = 0; j < dim; ++j) row[labels[j]] = combi_char_table_value(t.get(), i, j);
        obj[labels[i]] = row;
      }
      std::cout << obj.dump() << '\n';
    } else {
      for (const auto& l : labels) std::cout << '\t' << l;
      std::cout << '\n';
      for (std::size_t i = 0; i < dim; ++i) {
        std::cout << labels[i];
        for (std::size_t j = 0; j < dim; ++j) std::cout << '\t' << combi_char_table_value(t.get(), i, j);
        std::cout << '\n';
      }
    }
  } else if (syt->parsed()) {
    auto la = parse_partition(syt_la, "LA");
    int64_t value = 0;
    check(combi_count_syt(la.get(), &value));
    std::cout << value << '\n';
  } else if (yam->parsed()) {
    auto mu = parse_partition(yam_mu, "MU");
    combi_seq_list* raw = nullptr;
    check(combi_yamanouchi_words(mu.get(), &raw));
    ListPtr list(raw);
    print_lines(list.get());
  } else if (kostka->parsed()) {
    auto la = parse_partition(kostka_la, "LA");
    auto mu = parse_partition(kostka_mu, "MU");
    int64_t value = 0;
    check(combi_kostka(la.get(), mu.get(), &value));
    std::cout << value << '\n';
  } else if (bench_lr->parsed()) {
    if (bench_repeat < 1) throw CommandError{kExitUsage, "--repeat: must be at least 1"};
    std::vector<double> ms;
    int64_t value = 0;
    for (int i = 0; i < bench_repeat; ++i) {
      auto start = std::chrono::steady_clock::now();
      value = run_lrcoef(bench_args);
      std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
      ms.push_back(elapsed.count());
    }
    std::sort(ms.begin(), ms.end());
    std::cout << "result " << value << '\n';
    std::cout << "repeat " << bench_repeat << '\n';
    std::cout << "min_ms " << ms.front() << '\n';
    std::cout << "median_ms " << ms[ms.size() / 2] << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}
