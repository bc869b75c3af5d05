// comer: command-line front end.
//
// Subcommands: spectrum, search, verify, aut, table, growth.
// Exit codes: 0 success / found / pass, 1 legitimate negative
// (no hit below the bound, failed verification, reference mismatch),
// 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "comer/embed.hpp"
#include "comer/search.hpp"

#include "CLI11.hpp"

namespace {

using nlohmann::ordered_json;

// Everything writes through here so --out works uniformly.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::trunc);
  if (!out) throw comer::Error("cannot open output file: " + out_path);
  out << text;
}

std::array<int, 3> parse_scheme_triple(const std::string& text) {
  std::array<int, 3> rep{};
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> rep[0] >> c1 >> rep[1] >> c2 >> rep[2]) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof())
    throw comer::InvalidSchemeError("scheme must be a comma triple like 0,0,12; got '" + text + "'");
  return rep;
}

std::string resolve_checkpoint_path(const std::string& path) {
  if (path.empty()) return path;
  if (path.front() == '/' ) return path;
  if (const char* cache = std::getenv("COMER_RA_CACHE"); cache != nullptr && *cache != 0)
    return std::string(cache) + "/" + path;
  return path;
}

struct CommonFlags {
  std::string format = "text";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonFlags& flags, const std::string& default_format = "text") {
  flags.format = default_format;
  cmd->add_option("--format", flags.format, "output format")->check(CLI::IsMember({"text", "json", "csv", "tsv"}));
  cmd->add_option("--out", flags.out_path, "write output to a file instead of stdout");
}

int cmd_spectrum(std::uint64_t p, int n, std::optional<std::uint64_t> g, const CommonFlags& flags) {
  const comer::CosetPartition part = comer::build_partition(p, n, g);
  const comer::SumSpectrum spectrum = comer::compute_spectrum(part);
  if (flags.format == "json")
    emit(comer::spectrum_report(spectrum).dump() + "\n", flags.out_path);
  else
    emit(comer::render_spectrum_text(spectrum), flags.out_path);
  return 0;
}

int cmd_search(int n, const std::vector<std::string>& scheme_texts, const std::string& parity_text,
               std::uint64_t max_p, int jobs, const std::string& resume_path, const CommonFlags& flags) {
  std::vector<std::array<int, 3>> reps;
  for (const std::string& s : scheme_texts) reps.push_back(parse_scheme_triple(s));
  const comer::ForbiddenScheme scheme = comer::make_scheme(n, reps, comer::parity_from_string(parity_text));

  comer::SearchOptions options;
  options.workers = jobs;
  options.checkpoint_path = resolve_checkpoint_path(resume_path);
  const comer::SearchOutcome outcome = comer::search_scheme(scheme, max_p, options);
  std::cerr << "scanned " << outcome.primes_checked << " candidate primes in " << outcome.elapsed_s << "s\n";

  if (flags.format == "json") {
    ordered_json j;
    j["n"] = scheme.n;
    ordered_json classes = ordered_json::array();
    for (const auto& c : scheme.classes) classes.push_back(c);
    j["classes"] = classes;
    j["parity"] = comer::to_string(scheme.parity);
    j["max_p"] = max_p;
    j["status"] = outcome.found ? "found" : "none_below_bound";
    if (outcome.found) {
      j["p"] = outcome.p;
      j["g"] = outcome.g;
    }
    j["primes_checked"] = outcome.primes_checked;
    emit(j.dump() + "\n", flags.out_path);
  } else {
    std::ostringstream out;
    if (outcome.found)
      out << "found p=" << outcome.p << " g=" << outcome.g << " (checked " << outcome.primes_checked
          << " primes)\n";
    else
      out << "none below " << max_p << " (checked " << outcome.primes_checked << " primes)\n";
    emit(out.str(), flags.out_path);
  }
  return outcome.found ? 0 : 1;
}

int cmd_verify(const std::string& algebra, std::uint64_t p, int n, std::optional<std::uint64_t> g,
               const std::string& catalog_path, const CommonFlags& flags) {
  std::vector<comer::NamedAlgebra> extra;
  if (!catalog_path.empty()) extra = comer::load_catalog_file(catalog_path);

  const comer::NamedAlgebra* entry = comer::find_algebra(extra, algebra);
  if (entry == nullptr) entry = comer::find_algebra(comer::builtin_catalog(), algebra);
  if (entry == nullptr) throw comer::UnknownAlgebraError("unknown algebra: " + algebra);

  comer::SchemeTemplate tmpl;
  if (comer::find_algebra(comer::builtin_catalog(), algebra) != nullptr) {
    tmpl = comer::scheme_for(algebra, n);
  } else if (entry->file_template.has_value() && entry->file_template->scheme.n == n) {
    tmpl = *entry->file_template;
  } else {
    throw comer::IncompatibleColorCountError("no embedding template for " + algebra + " over " +
                                             std::to_string(n) + " colors");
  }

  const comer::CosetPartition part = comer::build_partition(p, n, g);
  const comer::SumSpectrum spectrum = comer::compute_spectrum(part);
  const comer::EmbeddingReport report =
      comer::verify_embedding(entry->structure, comer::embedding_from_template(tmpl, spectrum));

  std::vector<std::array<int, 3>> observed;
  for (const comer::CycleClass& c : comer::forbidden_classes(spectrum)) observed.push_back(c.rep);
  const bool scheme_match = observed == tmpl.scheme.classes;

  auto cycle_name = [&](const std::array<int, 3>& cycle) {
    return entry->atom_names[cycle[0]] + " " + entry->atom_names[cycle[1]] + " " + entry->atom_names[cycle[2]];
  };

  if (flags.format == "json") {
    ordered_json j;
    j["algebra"] = algebra;
    j["p"] = p;
    j["n"] = n;
    j["g"] = spectrum.g;
    ordered_json classes = ordered_json::array();
    for (const auto& c : observed) classes.push_back(c);
    j["forbidden_classes"] = classes;
    j["scheme_match"] = scheme_match;
    ordered_json cycles = ordered_json::array();
    for (const comer::CycleCheck& check : report.cycles) {
      ordered_json c;
      c["cycle"] = cycle_name(check.cycle);
      c["forbidden"] = check.forbidden_in_structure;
      c["pass"] = check.pass;
      if (!check.pass) c["detail"] = check.detail;
      cycles.push_back(c);
    }
    j["cycles"] = cycles;
    j["verdict"] = report.pass ? "PASS" : "FAIL";
    emit(j.dump() + "\n", flags.out_path);
  } else {
    std::ostringstream out;
    out << algebra << " into C(" << p << "," << n << ") with g=" << spectrum.g << "\n";
    for (const comer::CycleCheck& check : report.cycles) {
      out << (check.pass ? "PASS" : "FAIL") << "  " << cycle_name(check.cycle) << "  "
          << (check.forbidden_in_structure ? "(forbidden)" : "(mandatory)");
      if (!check.pass) out << "  " << check.detail;
      out << "\n";
    }
    out << "overall: " << (report.pass ? "PASS" : "FAIL") << "\n";
    emit(out.str(), flags.out_path);
  }
  return report.pass ? 0 : 1;
}

int cmd_aut(int n, int j, int ell, int cap, const CommonFlags& flags) {
  const comer::AtomStructure s = comer::make_An(n, j, ell);
  const std::vector<comer::IndexPermutation> auts = comer::automorphisms(s, cap);
  if (flags.format == "json") {
    ordered_json out;
    out["n"] = n;
    out["j"] = j;
    out["ell"] = ell;
    out["count"] = auts.size();
    ordered_json list = ordered_json::array();
    for (const comer::IndexPermutation& pi : auts) list.push_back(pi.cycle_notation());
    out["automorphisms"] = list;
    emit(out.dump() + "\n", flags.out_path);
  } else {
    std::ostringstream out;
    out << "aut(A_" << n << "([i,i+" << j << ",i+" << ell << "])) has " << auts.size() << " elements\n";
    for (const comer::IndexPermutation& pi : auts) out << pi.cycle_notation() << "\n";
    emit(out.str(), flags.out_path);
  }
  return 0;
}

int cmd_table(int max_n, std::uint64_t max_p, bool check_reference, int jobs, const CommonFlags& flags) {
  const std::vector<comer::TableRow> rows = comer::reproduce_table(max_n, max_p, jobs);
  if (flags.format == "json")
    emit(comer::table_json(rows, max_p).dump() + "\n", flags.out_path);
  else
    emit(comer::render_table_csv(rows, max_p), flags.out_path);

  if (!check_reference) return 0;
  const comer::TableCheck check = comer::check_table_against_reference(rows, max_p);
  for (const comer::TableCheckItem& note : check.notes) std::cerr << "advisory: " << note.message << "\n";
  for (const comer::TableCheckItem& miss : check.mismatches) std::cerr << "mismatch: " << miss.message << "\n";
  std::cerr << "reference check: " << check.mismatches.size() << " mismatch(es), " << check.notes.size()
            << " advisory note(s)\n";
  return check.mismatches.empty() ? 0 : 1;
}

int cmd_growth(int min_n, int max_n, const std::vector<std::string>& scheme_texts, std::uint64_t max_p,
               const std::string& parity_text, int jobs, const CommonFlags& flags) {
  std::vector<std::array<int, 3>> reps;
  for (const std::string& s : scheme_texts) reps.push_back(parse_scheme_triple(s));
  if (reps.empty()) reps = {{0, 0, 0}, {0, 0, 1}};
  const std::vector<comer::GrowthRow> rows =
      comer::emit_growth_data(min_n, max_n, reps, max_p, comer::parity_from_string(parity_text), jobs);
  if (flags.format == "json")
    emit(comer::growth_json(rows).dump() + "\n", flags.out_path);
  else
    emit(comer::render_growth_tsv(rows), flags.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Comer algebras C(p,n): spectra, forbidden-scheme searches, and embeddings"};
  app.require_subcommand(1);

  // spectrum
  auto* sp = app.add_subcommand("spectrum", "forbidden-cycle spectrum of C(p,n)");
  std::uint64_t sp_p = 0;
  int sp_n = 0;
  std::optional<std::uint64_t> sp_g;
  CommonFlags sp_flags;
  sp->add_option("--p", sp_p, "prime modulus")->required();
  sp->add_option("--n", sp_n, "number of cosets")->required();
  sp->add_option("--g", sp_g, "primitive root (default: smallest)");
  add_common(sp, sp_flags);

  // search
  auto* se = app.add_subcommand("search", "smallest prime realizing a forbidden scheme");
  int se_n = 0;
  std::vector<std::string> se_schemes;
  std::string se_parity = "even";
  std::uint64_t se_maxp = 5000;
  int se_jobs = 0;
  std::string se_resume;
  CommonFlags se_flags;
  se->add_option("--n", se_n, "number of cosets")->required();
  se->add_option("--scheme", se_schemes, "target class as i,j,k (repeatable)")->required();
  se->add_option("--parity", se_parity, "required parity of k: even, odd, any");
  se->add_option("--max-p", se_maxp, "search bound");
  se->add_option("--jobs", se_jobs, "worker threads (0 = all cores)");
  se->add_option("--resume", se_resume, "checkpoint file (resolved against COMER_RA_CACHE if relative)");
  add_common(se, se_flags);

  // verify
  auto* ve = app.add_subcommand("verify", "check a named algebra's embedding into C(p,n)");
  std::string ve_algebra;
  std::uint64_t ve_p = 0;
  int ve_n = 0;
  std::optional<std::uint64_t> ve_g;
  std::string ve_catalog;
  CommonFlags ve_flags;
  ve->add_option("--algebra", ve_algebra, "catalog name, e.g. 34_65")->required();
  ve->add_option("--p", ve_p, "prime modulus")->required();
  ve->add_option("--n", ve_n, "number of cosets")->required();
  ve->add_option("--g", ve_g, "primitive root (default: smallest)");
  ve->add_option("--catalog", ve_catalog, "catalog extension file");
  add_common(ve, ve_flags);

  // aut
  auto* au = app.add_subcommand("aut", "automorphisms of A_n([i,i+j,i+ell])");
  int au_n = 0, au_j = 0, au_ell = 0, au_cap = comer::DEFAULT_AUT_CAP;
  CommonFlags au_flags;
  au->add_option("--n", au_n, "number of diversity atoms")->required();
  au->add_option("--j", au_j, "second offset")->required();
  au->add_option("--ell", au_ell, "third offset")->required();
  au->add_option("--cap", au_cap, "enumeration cap on n");
  add_common(au, au_flags);

  // table
  auto* ta = app.add_subcommand("table", "smallest moduli for offsets 0,1,2 per color count");
  int ta_maxn = 0;
  std::uint64_t ta_maxp = 5000;
  bool ta_check = false;
  int ta_jobs = 0;
  CommonFlags ta_flags;
  ta->add_option("--max-n", ta_maxn, "rows to produce")->required();
  ta->add_option("--max-p", ta_maxp, "search bound per cell");
  ta->add_flag("--check-paper", ta_check, "diff against the published reference values (n <= 16)");
  ta->add_option("--jobs", ta_jobs, "worker threads (0 = all cores)");
  add_common(ta, ta_flags, "csv");

  // growth
  auto* gr = app.add_subcommand("growth", "smallest modulus per (n, scheme), for plotting");
  int gr_minn = 1, gr_maxn = 0, gr_jobs = 0;
  std::vector<std::string> gr_schemes;
  std::uint64_t gr_maxp = 5000;
  std::string gr_parity = "even";
  CommonFlags gr_flags;
  gr->add_option("--min-n", gr_minn, "first color count");
  gr->add_option("--max-n", gr_maxn, "last color count")->required();
  gr->add_option("--schemes", gr_schemes, "schemes as i,j,k (space separated)")->expected(-1);
  gr->add_option("--max-p", gr_maxp, "search bound");
  gr->add_option("--parity", gr_parity, "required parity of k");
  gr->add_option("--jobs", gr_jobs, "worker threads (0 = all cores)");
  add_common(gr, gr_flags, "tsv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (sp->parsed()) return cmd_spectrum(sp_p, sp_n, sp_g, sp_flags);
    if (se->parsed()) return cmd_search(se_n, se_schemes, se_parity, se_maxp, se_jobs, se_resume, se_flags);
    if (ve->parsed()) return cmd_verify(ve_algebra, ve_p, ve_n, ve_g, ve_catalog, ve_flags);
    if (au->parsed()) return cmd_aut(au_n, au_j, au_ell, au_cap, au_flags);
    if (ta->parsed()) return cmd_table(ta_maxn, ta_maxp, ta_check, ta_jobs, ta_flags);
    if (gr->parsed()) return cmd_growth(gr_minn, gr_maxn, gr_schemes, gr_maxp, gr_parity, gr_jobs, gr_flags);
  } catch (const comer::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
