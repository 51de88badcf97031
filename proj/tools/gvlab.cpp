// gvlab: exact flag-vector / CD-basis toolkit for low-dimensional polytopes.
//
// Subcommands:
//   flag      flag vector, CD vector, order-zero g and h of one polytope
//   corpus    build a corpus cache of 01-polytope classes (+ polars)
//   search    effective / extremal word-set analysis over a cache
//   verify    self-contained checks against the bundled d=5 reference data
//   distance  find cube vertex subsets by distance count

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gv/d5.hpp"
#include "gv/search.hpp"

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;

void print_entry(std::ostream& out, const gv::CorpusEntry& e) {
  out << gv::flag_str(e.flag) << "\n";
  out << gv::cd_str(e.cd) << "\n";
  std::vector<gv::Rat> g = gv::g_order_zero(e.cd);
  out << "g =";
  for (const auto& x : g) out << " " << gv::rat_str(x);
  out << "\n";
  std::vector<gv::Rat> h = gv::h_vector(g, e.d);
  out << "h =";
  for (const auto& x : h) out << " " << gv::rat_str(x);
  out << "\n";
}

int cmd_flag(const std::string& file, const std::string& mask_hex, int mask_dim_arg,
             bool polar) {
  gv::CorpusEntry primal, polar_entry;
  if (!mask_hex.empty()) {
    gv::VertexMask m{mask_dim_arg, std::stoull(mask_hex, nullptr, 16)};
    std::tie(primal, polar_entry) = gv::build_entry(m);
  } else {
    gv::Polytope p = gv::read_vertex_file(file);
    p = gv::vertex_reduce(p);
    p = gv::reduce_to_full_dim(p);
    const int d = static_cast<int>(p.ambient_dim());
    primal.d = d;
    if (d == 0) {
      primal.flag = gv::FlagVector{0, {1}};
    } else {
      gv::FacetDescription fd = gv::facet_enum(p);
      primal.flag = gv::flag_vector(gv::lattice_from_incidence(fd, d));
    }
    primal.cd = gv::cd_decompose(primal.flag);
    polar_entry.d = d;
    polar_entry.flag = gv::polar_flag(primal.flag);
    polar_entry.cd = gv::cd_decompose(polar_entry.flag);
  }
  print_entry(std::cout, polar ? polar_entry : primal);
  return 0;
}

int cmd_corpus(int d, bool exhaustive, int sample_n, std::uint64_t seed,
               const std::string& ingest, const std::string& out_path,
               unsigned threads) {
  std::vector<gv::VertexMask> masks;
  if (exhaustive) {
    masks = gv::enumerate_01(d);  // throws for d >= 5
  } else if (!ingest.empty()) {
    masks = gv::read_mask_list(ingest);
    for (const auto& m : masks)
      if (m.d != d) throw std::runtime_error("ingest: mask dimension differs from d");
  } else if (sample_n > 0) {
    masks = gv::sample_01(d, sample_n, seed);
  } else {
    throw std::runtime_error("corpus: choose --exhaustive, --sample or --ingest");
  }
  std::cerr << "building " << masks.size() << " classes (d=" << d << ")\n";
  std::vector<gv::CorpusEntry> entries = gv::build_corpus(masks, threads);
  if (out_path.empty() || out_path == "-") {
    gv::cache_write(std::cout, entries);
  } else {
    gv::cache_write(out_path, entries);
    std::cerr << "wrote " << entries.size() << " entries to " << out_path << "\n";
  }
  return 0;
}

int cmd_search(const std::string& cache_path, const std::string& report_path,
               unsigned threads) {
  gv::CacheReadResult cache = gv::cache_read(cache_path);
  for (const auto& err : cache.errors) std::cerr << "cache: " << err << "\n";
  if (cache.entries.empty()) throw std::runtime_error("search: empty cache");
  gv::SearchReport rep =
      gv::run_search(cache.entries, gv::file_fingerprint(cache_path), threads);
  if (report_path.empty() || report_path == "-") {
    gv::write_report(std::cout, rep);
  } else {
    std::ofstream out(report_path);
    if (!out) throw std::runtime_error("cannot write " + report_path);
    gv::write_report(out, rep);
  }
  return 0;
}

int cmd_verify(bool tamper_basis) {
  using gv::Rat;
  bool all_ok = true;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << ": " << name << "\n";
    all_ok = all_ok && ok;
  };

  // Fibonacci rank of the word basis, d = 0..6.
  const long long expect_rank[] = {1, 1, 2, 3, 5, 8, 13};
  for (int d = 0; d <= 6; ++d) {
    gv::QMatrix m = gv::flag_basis(d).matrix;
    if (tamper_basis && m.cols >= 2)  // negative-control hook: duplicate a column
      for (std::size_t r = 0; r < m.rows; ++r) m.at(r, 1) = m.at(r, 0);
    std::ostringstream name;
    name << "basis rank F_" << (d + 1) << " = " << expect_rank[d] << " (d=" << d << ")";
    check(name.str(), gv::mat_rank(m) == static_cast<std::size_t>(expect_rank[d]) &&
                          m.cols == static_cast<std::size_t>(expect_rank[d]));
  }

  // Exceptional polytope: exactly one of primal/polar matches the reference
  // CD vector; its lambda sums and g components match.
  auto [primal, polar] = gv::build_entry(gv::exceptional_mask5());
  const gv::CDVector ref = gv::d5::exceptional_cd();
  const bool primal_hits = primal.cd == ref;
  const bool polar_hits = polar.cd == ref;
  check("exceptional polytope: exactly one of primal/polar has the reference CD vector",
        primal_hits != polar_hits);
  const gv::CDVector& hit = primal_hits ? primal.cd : polar.cd;
  check("exceptional polytope: lambda_{CDCC}+lambda_{CCDC}+lambda_{CCCD} = -2",
        gv::lambda_sum(hit, gv::d5::s1211()) - gv::lambda_sum(hit, gv::d5::s122()) ==
            Rat(-2));
  check("exceptional polytope: g components (1,18,15,18,64,8,20,0)",
        gv::g_vector(hit, gv::d5::component_sets()) == gv::d5::exceptional_g());

  // Distance counts of the missing vertices.
  {
    gv::VertexMask missing = gv::exceptional_missing5();
    bool ok = true;
    for (int v = 0; v < 32; ++v)
      if ((missing.mask >> v) & 1)
        ok = ok && gv::distance_count(5, v, missing.mask).counts ==
                       gv::d5::exceptional_distance_count();
    check("missing-vertex set: distance count (1,0,2,4,1,0) for every member", ok);
  }

  // Unit decomposition of every degree-5 basis word.
  {
    bool ok = true;
    const auto& ws = gv::words(5);
    for (std::size_t i = 0; i < ws.size() && ok; ++i) {
      gv::CDVector cd = gv::cd_decompose(gv::word_flag(ws[i]));
      for (std::size_t j = 0; j < ws.size(); ++j)
        ok = ok && cd.coeffs[j] == Rat(i == j ? 1 : 0);
    }
    check("degree-5 words decompose to unit vectors", ok);
  }

  if (!all_ok) return kExitVerifyFail;
  return 0;
}

int cmd_distance(int d, int k, const std::string& target_csv) {
  std::vector<int> target;
  std::istringstream is(target_csv);
  std::string tok;
  while (std::getline(is, tok, ',')) target.push_back(std::stoi(tok));
  if (static_cast<int>(target.size()) != d + 1)
    throw std::runtime_error("distance: target must have d+1 components");
  std::vector<gv::VertexMask> hits = gv::find_by_distance_count(d, k, target);
  for (const auto& m : hits) std::cout << gv::mask_record(m) << "\n";
  std::cerr << hits.size() << " canonical class(es)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact flag-vector and CD-basis toolkit for convex polytopes"};
  app.set_version_flag("--version", gv::kToolVersion);
  app.require_subcommand(1);

  auto* flag_cmd = app.add_subcommand("flag", "flag/CD/g/h of one polytope");
  std::string flag_file, flag_mask;
  int flag_dim = 0;
  bool flag_polar = false;
  flag_cmd->add_option("file", flag_file, "vertex file ('#' comments, rational coords)");
  flag_cmd->add_option("--mask", flag_mask, "cube vertex mask, hex");
  flag_cmd->add_option("--dim", flag_dim, "cube dimension for --mask");
  flag_cmd->add_flag("--polar", flag_polar, "apply the polar transform first");

  auto* corpus_cmd = app.add_subcommand("corpus", "build a corpus cache");
  int corpus_d = 0, corpus_n = 0;
  std::uint64_t corpus_seed = 0;
  bool corpus_exh = false;
  std::string corpus_ingest, corpus_out;
  unsigned corpus_threads = 0;
  corpus_cmd->add_option("d", corpus_d, "dimension")->required();
  corpus_cmd->add_flag("--exhaustive", corpus_exh, "all classes (d <= 4)");
  corpus_cmd->add_option("--sample", corpus_n, "number of seeded-random classes");
  corpus_cmd->add_option("--seed", corpus_seed, "sampling seed");
  corpus_cmd->add_option("--ingest", corpus_ingest, "mask list file");
  corpus_cmd->add_option("--out", corpus_out, "cache output path ('-' = stdout)");
  corpus_cmd->add_option("--threads", corpus_threads, "worker count (0 = auto)");

  auto* search_cmd = app.add_subcommand("search", "effective/extremal analysis");
  std::string search_cache, search_report;
  unsigned search_threads = 0;
  search_cmd->add_option("cache", search_cache, "corpus cache file")->required();
  search_cmd->add_option("--report", search_report, "report output path ('-' = stdout)");
  search_cmd->add_option("--threads", search_threads, "worker count (0 = auto)");

  auto* verify_cmd = app.add_subcommand("verify", "bundled reference checks");
  bool tamper = false;
  verify_cmd->add_flag("--tamper-basis", tamper, "negative control: corrupt the basis");

  auto* dist_cmd = app.add_subcommand("distance", "search subsets by distance count");
  int dist_d = 0, dist_k = 0;
  std::string dist_target;
  dist_cmd->add_option("d", dist_d, "cube dimension")->required();
  dist_cmd->add_option("k", dist_k, "subset size")->required();
  dist_cmd->add_option("target", dist_target, "comma-separated counts, d+1 of them")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (flag_cmd->parsed()) {
      if (flag_file.empty() == flag_mask.empty())
        throw std::runtime_error("flag: give exactly one of a file or --mask/--dim");
      return cmd_flag(flag_file, flag_mask, flag_dim, flag_polar);
    }
    if (corpus_cmd->parsed())
      return cmd_corpus(corpus_d, corpus_exh, corpus_n, corpus_seed, corpus_ingest,
                        corpus_out, corpus_threads);
    if (search_cmd->parsed()) return cmd_search(search_cache, search_report, search_threads);
    if (verify_cmd->parsed()) return cmd_verify(tamper);
    if (dist_cmd->parsed()) return cmd_distance(dist_d, dist_k, dist_target);
  } catch (const gv::NotInFlagSpan& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return 0;
}
