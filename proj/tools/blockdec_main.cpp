// Command-line front end: parse ideals and decompositions, run the
// decomposition and filtration algorithms, render two-row block matrices.
// Exit codes: 0 success, 1 failed check (verify/subprime/search), 2 usage or
// parse errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blockdec/blockdec.hpp"

namespace {

using namespace blockdec;

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

std::vector<std::string> names_or_default(
    const std::optional<std::vector<std::string>>& names, std::size_t n) {
  return names ? *names : default_variable_names(n);
}

IdealDocument load_ideal(const std::string& path,
                         std::optional<std::size_t> dim) {
  IdealDocument doc = parse_ideal(read_input(path), dim);
  if (!doc.dropped_generators.empty()) {
    const auto names =
        names_or_default(doc.variable_names, doc.ideal.dimension());
    for (const auto& g : doc.dropped_generators)
      std::cerr << "warning: dropped redundant generator "
                << render_monomial(g, names) << "\n";
  }
  return doc;
}

std::vector<std::size_t> parse_index_list(const std::string& text,
                                          const std::string& what) {
  std::vector<std::size_t> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      const unsigned long v = std::stoul(item);
      if (v == 0) throw std::invalid_argument("zero");
      out.push_back(static_cast<std::size_t>(v) - 1);
    } catch (const std::exception&) {
      throw std::invalid_argument(what + " must be a comma-separated list of "
                                         "1-based indices");
    }
  }
  return out;
}

Permutation resolve_order(const std::string& order, std::size_t n,
                          const std::string& what) {
  if (order == "input") return identity_permutation(n);
  if (order == "reverse") {
    Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = n - 1 - i;
    return p;
  }
  Permutation p = parse_index_list(order, what);
  require_permutation(p, n);
  return p;
}

BlockDecomposition reorder_blocks(const BlockDecomposition& d,
                                  const std::string& order) {
  const Permutation p = resolve_order(order, d.size(), "--order");
  std::vector<Block> blocks;
  blocks.reserve(d.size());
  for (std::size_t i : p) blocks.push_back(d.blocks()[i]);
  return BlockDecomposition(d.dimension(), std::move(blocks));
}

void print_decomposition(const BlockDecomposition& d,
                         const std::optional<std::vector<std::string>>& names,
                         const std::string& format) {
  if (format == "structured")
    std::cout << render_decomposition_json(d, names);
  else
    std::cout << render_decomposition_text(d);
}

struct DecompositionInput {
  DecompositionDocument doc;
  std::string raw;
};

DecompositionInput load_decomposition(const std::string& path) {
  std::string raw = read_input(path);
  DecompositionDocument doc = parse_decomposition(raw);
  return {std::move(doc), std::move(raw)};
}

// The ideal for subprime/filtration/verify: from --ideal, or from the same
// JSON document when it also carries generators.
IdealDocument resolve_ideal(const std::string& ideal_path,
                            const DecompositionInput& input) {
  if (!ideal_path.empty()) return load_ideal(ideal_path, std::nullopt);
  try {
    return parse_ideal(input.raw);
  } catch (const std::exception&) {
    throw std::invalid_argument(
        "an ideal is required: pass --ideal or embed \"generators\" in the "
        "document");
  }
}

struct CommonOptions {
  std::string input = "-";
  std::string format = "text";
  std::string ideal_path;
  std::string order = "input";
  std::string pi;
  std::optional<std::size_t> dim;
  std::optional<Exponent> truncation;
  std::size_t max_subset = kCompressionSubsetCap;
  bool search = false;
};

int run_elementary(const CommonOptions& opt) {
  const IdealDocument doc = load_ideal(opt.input, opt.dim);
  print_decomposition(elementary_decomposition(doc.ideal), doc.variable_names,
                      opt.format);
  return 0;
}

int run_gnomon(const CommonOptions& opt) {
  const IdealDocument doc = load_ideal(opt.input, opt.dim);
  const std::size_t r = doc.ideal.generators().size();
  const Permutation gen_order = resolve_order(opt.order, r, "--order");
  const Permutation pi =
      opt.pi.empty() ? identity_permutation(doc.ideal.dimension())
                     : [&] {
                         Permutation p = parse_index_list(opt.pi, "--pi");
                         require_permutation(p, doc.ideal.dimension());
                         return p;
                       }();
  print_decomposition(gnomon_decomposition(doc.ideal, gen_order, pi),
                      doc.variable_names, opt.format);
  return 0;
}

int run_stanley(const CommonOptions& opt) {
  const DecompositionInput input = load_decomposition(opt.input);
  const auto& d = input.doc.decomposition;
  const auto spaces = decomposition_to_stanley(d);
  if (opt.format == "structured") {
    nlohmann::json j;
    j["n"] = d.dimension();
    if (input.doc.variable_names) j["variable_names"] = *input.doc.variable_names;
    auto arr = nlohmann::json::array();
    for (const auto& s : spaces) {
      nlohmann::json js;
      auto free_vars = nlohmann::json::array();
      for (std::size_t i : s.free_variables) free_vars.push_back(i + 1);
      js["free_variables"] = std::move(free_vars);
      js["base"] = s.base;
      arr.push_back(std::move(js));
    }
    j["spaces"] = std::move(arr);
    std::cout << j.dump(2) << "\n";
  } else {
    const auto names =
        names_or_default(input.doc.variable_names, d.dimension());
    for (const auto& s : spaces)
      std::cout << render_stanley_space(s, names) << "\n";
  }
  return 0;
}

int run_count(const CommonOptions& opt) {
  const DecompositionInput input = load_decomposition(opt.input);
  std::uint64_t total = 0;
  std::size_t index = 0;
  for (const Block& b : input.doc.decomposition.blocks()) {
    if (b.is_empty()) continue;
    ++index;
    const std::uint64_t count = stanley_space_count(b);
    std::cout << "block " << index << ": " << count << "\n";
    total += count;
  }
  std::cout << "total: " << total << "\n";
  return 0;
}

int run_compress(const CommonOptions& opt) {
  const DecompositionInput input = load_decomposition(opt.input);
  print_decomposition(
      compress_greedy(input.doc.decomposition, opt.max_subset),
      input.doc.variable_names, opt.format);
  return 0;
}

int check_is_decomposition(const BlockDecomposition& d,
                           const MonomialIdeal& ideal) {
  const PartitionReport report = verify_partition(d, ideal);
  if (!report.ok) {
    std::cout << "not a decomposition of the standard monomials: "
              << report.detail << " at (";
    const auto& p = *report.counterexample;
    for (std::size_t i = 0; i < p.size(); ++i)
      std::cout << (i ? "," : "") << p[i];
    std::cout << ")\n";
    return 1;
  }
  return 0;
}

int run_subprime(const CommonOptions& opt) {
  const DecompositionInput input = load_decomposition(opt.input);
  const IdealDocument ideal_doc = resolve_ideal(opt.ideal_path, input);
  const BlockDecomposition d =
      reorder_blocks(input.doc.decomposition, opt.order);
  const auto names = names_or_default(
      ideal_doc.variable_names ? ideal_doc.variable_names
                               : input.doc.variable_names,
      d.dimension());
  if (int rc = check_is_decomposition(d, ideal_doc.ideal)) return rc;

  if (opt.search) {
    const auto ordering = exists_subprime_ordering(d, ideal_doc.ideal);
    if (!ordering) {
      std::cout << "no subprime ordering exists\n";
      return 1;
    }
    std::cout << "subprime ordering:";
    for (std::size_t i : *ordering) std::cout << ' ' << i + 1;
    std::cout << "\n";
    std::vector<Block> blocks;
    for (std::size_t i : *ordering) blocks.push_back(d.blocks()[i]);
    const Filtration f = subprime_filtration(
        BlockDecomposition(d.dimension(), std::move(blocks)), ideal_doc.ideal);
    std::cout << render_filtration(f, names);
    return 0;
  }

  if (!is_subprime_ordered(d, ideal_doc.ideal)) {
    std::cout << "subprime: no\n";
    return 1;
  }
  std::cout << "subprime: yes\n";
  std::cout << render_filtration(subprime_filtration(d, ideal_doc.ideal),
                                 names);
  return 0;
}

int run_filtration(const CommonOptions& opt) {
  const DecompositionInput input = load_decomposition(opt.input);
  const IdealDocument ideal_doc = resolve_ideal(opt.ideal_path, input);
  const BlockDecomposition d =
      reorder_blocks(input.doc.decomposition, opt.order);
  const auto names = names_or_default(
      ideal_doc.variable_names ? ideal_doc.variable_names
                               : input.doc.variable_names,
      d.dimension());
  if (int rc = check_is_decomposition(d, ideal_doc.ideal)) return rc;
  if (!is_subprime_ordered(d, ideal_doc.ideal)) {
    std::cout << "subprime: no\n";
    return 1;
  }
  const Filtration f = subprime_filtration(d, ideal_doc.ideal);
  std::cout << render_filtration(f, names);
  std::cout << "prime filtration: " << (is_prime_filtration(f) ? "yes" : "no")
            << "\n";
  return 0;
}

int run_verify(const CommonOptions& opt) {
  const DecompositionInput input = load_decomposition(opt.input);
  const IdealDocument ideal_doc = resolve_ideal(opt.ideal_path, input);
  const PartitionReport report = verify_partition(
      input.doc.decomposition, ideal_doc.ideal, opt.truncation);
  if (!report.ok) {
    const auto& p = *report.counterexample;
    std::cout << "partition: FAIL at (";
    for (std::size_t i = 0; i < p.size(); ++i)
      std::cout << (i ? "," : "") << p[i];
    std::cout << "): " << report.detail << "\n";
    return 1;
  }
  std::cout << "partition: ok (truncation " << report.truncation << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block decompositions of the standard monomials of monomial "
               "ideals: elementary and gnomon decompositions, Stanley "
               "decompositions, compression, and subprime filtrations."};
  app.require_subcommand(1);

  CommonOptions opt;
  long long dim_flag = -1;
  long long truncation_flag = -1;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input,
                    "input document (file path or - for stdin)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
  };
  auto add_dim = [&](CLI::App* sub) {
    sub->add_option("--dim", dim_flag, "ambient dimension for inline input");
  };
  auto add_ideal = [&](CLI::App* sub) {
    sub->add_option("--ideal", opt.ideal_path, "ideal document");
  };

  CLI::App* elementary = app.add_subcommand(
      "elementary", "elementary block decomposition of an ideal");
  add_input(elementary);
  add_format(elementary);
  add_dim(elementary);

  CLI::App* gnomon = app.add_subcommand(
      "gnomon", "gnomon block decomposition of an ideal");
  add_input(gnomon);
  add_format(gnomon);
  add_dim(gnomon);
  gnomon->add_option("--order", opt.order,
                     "generator order: input, reverse, or a 1-based "
                     "permutation such as 2,1");
  gnomon->add_option("--pi", opt.pi,
                     "variable order as a 1-based permutation such as 2,1");

  CLI::App* stanley = app.add_subcommand(
      "stanley", "minimal Stanley decomposition of a block decomposition");
  add_input(stanley);
  add_format(stanley);

  CLI::App* count = app.add_subcommand(
      "count", "Stanley space counts of a block decomposition");
  add_input(count);

  CLI::App* compress = app.add_subcommand(
      "compress", "greedily merge blocks until incompressible");
  add_input(compress);
  add_format(compress);
  compress->add_option("--max-subset", opt.max_subset,
                       "largest decomposition size searched");

  CLI::App* subprime = app.add_subcommand(
      "subprime", "check an ordered decomposition for subprimality");
  add_input(subprime);
  add_ideal(subprime);
  subprime->add_option("--order", opt.order,
                       "block order: input, reverse, or a 1-based "
                       "permutation");
  subprime->add_flag("--search", opt.search,
                     "search all block orders for a subprime one");

  CLI::App* filtration = app.add_subcommand(
      "filtration", "construct the subprime filtration of an ordered "
                    "decomposition");
  add_input(filtration);
  add_ideal(filtration);
  filtration->add_option("--order", opt.order,
                         "block order: input, reverse, or a 1-based "
                         "permutation");

  CLI::App* verify = app.add_subcommand(
      "verify", "check that a decomposition partitions the standard "
                "monomials");
  add_input(verify);
  add_ideal(verify);
  verify->add_option("--truncation", truncation_flag,
                     "grid bound (must be at least the sufficient bound)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (dim_flag >= 0) opt.dim = static_cast<std::size_t>(dim_flag);
  if (truncation_flag >= 0) opt.truncation = truncation_flag;

  try {
    if (elementary->parsed()) return run_elementary(opt);
    if (gnomon->parsed()) return run_gnomon(opt);
    if (stanley->parsed()) return run_stanley(opt);
    if (count->parsed()) return run_count(opt);
    if (compress->parsed()) return run_compress(opt);
    if (subprime->parsed()) return run_subprime(opt);
    if (filtration->parsed()) return run_filtration(opt);
    if (verify->parsed()) return run_verify(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
