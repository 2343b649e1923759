#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tmwit/tmwit.hpp"

namespace tmwit::cli {
namespace {

using json::ordered;

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Natural positive(const std::string& text, const char* what) {
  Natural n = Natural::parse(text);
  if (n.is_zero()) throw precondition_error(std::string(what) + " must be >= 1");
  return n;
}

// f - k as a JSON integer, falling back to a decimal string when it does not
// fit in 53 bits.
ordered signed_difference(const Natural& f, const Natural& k) {
  if (f >= k) return json::natural(f - k);
  const Natural mag = k - f;
  if (mag <= Natural(json::kMaxSafeInteger)) return -static_cast<std::int64_t>(mag.to_u64());
  return "-" + mag.to_string();
}

void print(std::ostream& out, const ordered& j) { out << j.dump() << '\n'; }

struct Options {
  std::string n, base, k;
  std::string method;
  std::uint64_t from = 0, to = 0;
  std::string csv;
  unsigned jobs = default_jobs();
  std::uint64_t r_from = 0, r_to = 0;
  unsigned bit_limit = 32;
  std::uint64_t samples = 0;
  std::uint64_t mod = 0;
  std::int64_t cls = 0;
  std::string residue;
  std::uint64_t k_max = 0;
  std::uint64_t base_u = 0;
};

int cmd_tm(const Options& o, std::ostream& out) {
  const Natural n = Natural::parse(o.n);
  ordered j;
  j["n"] = json::natural(n);
  j["t"] = thue_morse(n);
  print(out, j);
  return kOk;
}

int cmd_sdigits(const Options& o, std::ostream& out) {
  const Natural base = Natural::parse(o.base);
  const Natural n = Natural::parse(o.n);
  ordered j;
  j["base"] = json::natural(base);
  j["n"] = json::natural(n);
  j["s"] = json::natural(sum_digits(base, n));
  print(out, j);
  return kOk;
}

int cmd_f(const Options& o, std::ostream& out) {
  const Natural k = positive(o.k, "k");
  const auto [k_odd, shift] = reduce_to_odd(k);
  const Classification cls = classify(k_odd);

  Natural f;
  if (o.method == "oracle") {
    f = f_exact(k);
  } else if (o.method == "constructive") {
    f = f_upper(k);
  } else {
    f = f_exact(k);
    const Natural upper = f_upper(k);
    if (f > upper) throw theorem_violation("oracle f(k) exceeds constructive bound for k = " + k.to_string());
  }
  if (f > k_odd + Natural(4u)) throw theorem_violation("f(k) > k + 4 for k = " + k.to_string());

  ordered j;
  j["k"] = json::natural(k);
  j["f"] = json::natural(f);
  j["gap"] = signed_difference(f, k);
  j["case"] = std::string(to_string(cls.label));
  print(out, j);
  return kOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  print(out, json::certificate(certify(positive(o.k, "k"))));
  return kOk;
}

int cmd_zeromin(const Options& o, std::ostream& out) {
  print(out, json::zero_min_result(zero_min(positive(o.k, "k"))));
  return kOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
  if (o.from < 1 || o.from > o.to) throw usage_error("scan needs 1 <= --from <= --to");
  const unsigned jobs = std::max(1u, o.jobs);

  if (o.csv.empty()) {
    bool first = true;
    out << "[\n";
    scan_theorem(o.from, o.to, jobs, [&](const ScanRecord& r) {
      if (!first) out << ",\n";
      first = false;
      out << json::scan_record(r).dump();
    });
    out << "\n]\n";
    return kOk;
  }

  std::uint64_t count = 0;
  auto write_rows = [&](std::ostream& os) {
    os << kScanCsvHeader << '\n';
    scan_theorem(o.from, o.to, jobs, [&](const ScanRecord& r) {
      write_csv_row(os, r);
      ++count;
    });
  };
  if (o.csv == "-") {
    write_rows(out);
    return kOk;
  }
  detail::write_file(o.csv, write_rows);
  ordered j;
  j["from"] = json::natural(o.from);
  j["to"] = json::natural(o.to);
  j["records"] = json::natural(count);
  j["csv"] = o.csv;
  print(out, j);
  return kOk;
}

int cmd_weights(const Options& o, std::ostream& out) {
  const auto rows = scan_weight_family(o.r_from, o.r_to, o.bit_limit);
  ordered arr = ordered::array();
  std::uint64_t total = 0;
  for (const auto& row : rows) {
    arr.push_back(json::weight_family_row(row));
    total += row.counterexamples.size();
  }
  ordered j;
  j["bit_limit"] = o.bit_limit;
  j["rows"] = std::move(arr);
  j["counterexamples_total"] = total;
  print(out, j);
  return kOk;
}

int cmd_freq(const Options& o, std::ostream& out) {
  const FrequencyRecord rec = frequency(positive(o.k, "k"), o.samples);
  if (o.csv.empty()) {
    print(out, json::frequency_record(rec));
  } else if (o.csv == "-") {
    emit_frequency_csv({rec}, out);
  } else {
    emit_frequency_csv({rec}, std::filesystem::path(o.csv));
    print(out, json::frequency_record(rec));
  }
  return kOk;
}

int cmd_genbase(const Options& o, std::ostream& out) {
  const Natural k = positive(o.k, "k");
  std::optional<Natural> residue;
  if (!o.residue.empty()) residue = Natural::parse(o.residue);
  const GenBaseQuery q = GenBaseQuery::make(o.base_u, o.mod, o.cls, k, residue);

  ordered j;
  j["base"] = q.base();
  j["mod"] = q.modulus();
  j["class"] = q.target();
  j["k"] = json::natural(k);

  if (residue) {
    if (o.method == "oracle")
      throw usage_error("--method oracle is not available with --residue (only the construction is)");
    const CorollaryConstruction c = corollary_construct(q);
    j["residue"] = json::natural(*residue);
    j["constructed"] = json::natural(c.n);
    j["s"] = c.s;
    j["t"] = c.t;
    j["digit_sum_reading_holds"] = c.digit_sum_reading_holds;
    j["literal_reading_holds"] = c.literal_reading_holds;
    print(out, j);
    return kOk;
  }

  std::optional<PropConstruction> built;
  std::optional<Natural> minimal;
  if (o.method != "oracle") built = prop_construct(q);
  if (o.method != "construct") minimal = g_min(q);
  if (built) {
    j["constructed"] = json::natural(built->n);
    j["s"] = built->s;
    j["t"] = built->t;
  }
  if (minimal) j["minimal"] = json::natural(*minimal);
  if (built && minimal && *minimal > built->n)
    throw theorem_violation("oracle minimum exceeds the construction for k = " + k.to_string());
  print(out, j);
  return kOk;
}

int cmd_conjecture(const Options& o, std::ostream& out) {
  print(out, json::conjecture_report(conjecture_scan(o.base_u, o.mod, o.cls, o.k_max, std::max(1u, o.jobs))));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thue-Morse witnesses along arithmetic progressions"};
  app.name("tmwit");
  app.require_subcommand(1);
  Options o;

  auto* tm = app.add_subcommand("tm", "Thue-Morse bit t_n");
  tm->add_option("n", o.n, "n")->required();

  auto* sd = app.add_subcommand("sdigits", "Digit sum s_b(n)");
  sd->add_option("--base", o.base, "base b >= 2")->required();
  sd->add_option("n", o.n, "n")->required();

  auto* f = app.add_subcommand("f", "Least n with t_{kn} = 1");
  f->add_option("k", o.k, "k >= 1")->required();
  o.method = "both";
  f->add_option("--method", o.method, "oracle | constructive | both")
      ->check(CLI::IsMember({"oracle", "constructive", "both"}));

  auto* wit = app.add_subcommand("witness", "Verified witness certificate for k");
  wit->add_option("k", o.k, "k >= 1")->required();

  auto* zm = app.add_subcommand("zeromin", "Least n with t_{kn} = 0");
  zm->add_option("k", o.k, "k >= 1")->required();

  auto* scan = app.add_subcommand("scan", "Characterization scan over a k range");
  scan->add_option("--from", o.from, "first k")->required();
  scan->add_option("--to", o.to, "last k")->required();
  scan->add_option("--csv", o.csv, "write CSV to this path ('-' for standard output)");
  scan->add_option("--jobs", o.jobs, "worker threads");

  auto* wt = app.add_subcommand("weights", "Weight <= 2 check for k = 3*2^r + 3");
  wt->add_option("--r-from", o.r_from, "first r (>= 4)")->required();
  wt->add_option("--r-to", o.r_to, "last r")->required();
  wt->add_option("--bit-limit", o.bit_limit, "multipliers below 2^B")->required();

  auto* fq = app.add_subcommand("freq", "Exact frequency of t_{kn} = 1 for n <= X");
  fq->add_option("--k", o.k, "k >= 1")->required();
  fq->add_option("--samples", o.samples, "X >= 1")->required();
  fq->add_option("--csv", o.csv, "write CSV to this path ('-' for standard output)");

  auto* gb = app.add_subcommand("genbase", "Least / constructed n with s_b(kn) = c (mod r)");
  gb->add_option("--base", o.base_u, "base b >= 2")->required();
  gb->add_option("--mod", o.mod, "modulus r >= 1")->required();
  gb->add_option("--class", o.cls, "residue class c (any integer)")->required();
  gb->add_option("--k", o.k, "k >= 1")->required();
  gb->add_option("--residue", o.residue, "also require n = a (mod k)");
  gb->add_option("--method", o.method, "construct | oracle | both")
                        ->check(CLI::IsMember({"construct", "oracle", "both"}));

  auto* cj = app.add_subcommand("conjecture", "Scan max g(k) - k against b^(r+c)");
  cj->add_option("--base", o.base_u, "base b >= 2")->required();
  cj->add_option("--mod", o.mod, "modulus r >= 1")->required();
  cj->add_option("--class", o.cls, "residue class c")->required();
  cj->add_option("--max", o.k_max, "largest k")->required();
  cj->add_option("--jobs", o.jobs, "worker threads");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "tmwit: " << e.what() << '\n';
    return kUsage;
  }

  try {
    int code = kOk;
    if (tm->parsed()) code = cmd_tm(o, out);
    else if (sd->parsed()) code = cmd_sdigits(o, out);
    else if (f->parsed()) code = cmd_f(o, out);
    else if (wit->parsed()) code = cmd_witness(o, out);
    else if (zm->parsed()) code = cmd_zeromin(o, out);
    else if (scan->parsed()) code = cmd_scan(o, out);
    else if (wt->parsed()) code = cmd_weights(o, out);
    else if (fq->parsed()) code = cmd_freq(o, out);
    else if (gb->parsed()) code = cmd_genbase(o, out);
    else if (cj->parsed()) code = cmd_conjecture(o, out);
    out.flush();
    if (!out) {
      err << "tmwit: failed writing standard output\n";
      return kIoError;
    }
    return code;
  } catch (...) {
    return exit_code_for(std::current_exception(), err);
  }
}

int exit_code_for(std::exception_ptr error, std::ostream& err) {
  try {
    std::rethrow_exception(error);
  } catch (const theorem_violation& e) {
    err << "tmwit: theorem violation: " << e.what() << '\n';
    return kViolation;
  } catch (const internal_consistency_error& e) {
    err << "tmwit: internal inconsistency: " << e.what() << '\n';
    return kViolation;
  } catch (const io_error& e) {
    err << "tmwit: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "tmwit: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace tmwit::cli
