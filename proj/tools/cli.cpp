#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rpart/enumeration.hpp"
#include "rpart/error.hpp"
#include "rpart/glaisher.hpp"
#include "rpart/partition.hpp"
#include "rpart/qseries.hpp"
#include "rpart/statistics.hpp"

namespace rpart::cli {

namespace {

using nlohmann::json;

constexpr std::int64_t kMaxN = 200;
constexpr std::int64_t kMaxTruncation = 500;

enum class Format { Plain, Csv, JsonLines };

// Raised for argument problems detected after CLI11 parsing.
struct BadArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const auto *first = text.data();
  const auto *last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw BadArgument("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

std::vector<std::int64_t> parse_int_list(const std::string &text, std::string_view what) {
  std::vector<std::int64_t> out;
  if (text.empty())
    return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(parse_int(item, what));
  return out;
}

struct NRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

// "7" or "0..30".
NRange parse_n_range(const std::string &text) {
  const auto dots = text.find("..");
  NRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text, "n");
  } else {
    r.lo = parse_int(std::string_view(text).substr(0, dots), "n");
    r.hi = parse_int(std::string_view(text).substr(dots + 2), "n");
  }
  if (r.lo < 0 || r.hi < r.lo)
    throw BadArgument("invalid n range '" + text + "'");
  return r;
}

ModulusTuple parse_moduli(const std::string &text) {
  return ModulusTuple::validate(parse_int_list(text, "modulus"));
}

void guard_size(std::int64_t n, bool force) {
  if (n > kMaxN && !force)
    throw BadArgument("n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxN) +
                      "; pass --force to run anyway");
}

void guard_truncation(std::int64_t trunc, bool force) {
  if (trunc < 0)
    throw BadArgument("truncation must be non-negative");
  if (trunc > kMaxTruncation && !force)
    throw BadArgument("truncation " + std::to_string(trunc) + " exceeds " +
                      std::to_string(kMaxTruncation) + "; pass --force to run anyway");
}

json parts_json(const Partition &p) { return json(p.parts()); }

json moduli_json(const ModulusTuple &r) {
  return json(std::vector<std::int64_t>(r.all().begin(), r.all().end()));
}

// RFC 4180 field quoting for values that contain separators.
std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"')
      out += '"';
    out += ch;
  }
  return out + '"';
}

const char *bool_text(bool b) { return b ? "true" : "false"; }

PartitionClass make_class(const std::string &name, const std::optional<ModulusTuple> &moduli) {
  if (name == "all")
    return PartitionClass::all();
  if (!moduli)
    throw BadArgument("--class " + name + " needs --moduli");
  if (name == "rp")
    return PartitionClass::regular(*moduli);
  if (name == "cp")
    return PartitionClass::class_regular(*moduli);
  if (name == "irp")
    return PartitionClass::inferior(*moduli);
  throw BadArgument("unknown class '" + name + "'");
}

// ---- enumerate ------------------------------------------------------------

struct EnumerateArgs {
  std::string cls = "all";
  std::string moduli;
  std::int64_t n = 0;
  bool force = false;
};

int cmd_enumerate(const EnumerateArgs &args, Format format, std::ostream &out) {
  std::optional<ModulusTuple> moduli;
  if (!args.moduli.empty())
    moduli = parse_moduli(args.moduli);
  const PartitionClass cls = make_class(args.cls, moduli);
  if (args.n < 0)
    throw BadArgument("n must be non-negative");
  guard_size(args.n, args.force);

  if (format == Format::Csv)
    out << "parts,size,length\n";
  for_each_in_class(cls, args.n, [&](const Partition &p) {
    switch (format) {
    case Format::Plain: out << to_array_string(p) << '\n'; break;
    case Format::Csv:
      out << csv_field(to_array_string(p)) << ',' << p.size() << ',' << p.length() << '\n';
      break;
    case Format::JsonLines:
      out << json{{"parts", parts_json(p)}, {"size", p.size()}, {"length", p.length()}}.dump()
          << '\n';
      break;
    }
  });
  return kExitOk;
}

// ---- glaisher -------------------------------------------------------------

struct GlaisherArgs {
  std::string parts;
  std::int64_t r = 2;
  bool inverse = false;
};

std::string chain_text(const std::vector<Partition> &states) {
  std::string out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i)
      out += " -> ";
    out += to_exponent_string(states[i]);
  }
  return out;
}

int cmd_glaisher(const GlaisherArgs &args, Format format, std::ostream &out) {
  const Partition start = make_partition(parse_int_list(args.parts, "part"));
  if (args.r < 2)
    throw Error(ErrorKind::TooSmall, "r = " + std::to_string(args.r) + " is below 2");
  const GlaisherTrace trace =
      args.inverse ? glaisher_inverse(start, args.r) : glaisher_forward(start, args.r);
  const std::vector<Partition> states = trace.states();

  switch (format) {
  case Format::Plain:
    for (const Partition &p : states)
      out << to_array_string(p) << '\n';
    out << "chain=" << chain_text(states) << '\n';
    out << "count=" << trace.count() << '\n';
    break;
  case Format::Csv:
    out << "step,k,direction,parts\n";
    for (std::size_t i = 0; i < states.size(); ++i) {
      out << i << ',';
      if (i > 0) {
        const GlaisherStep &s = trace.steps[i - 1];
        out << s.k << ',' << (s.direction == StepDirection::Merge ? "merge" : "split");
      } else {
        out << ',';
      }
      out << ',' << csv_field(to_array_string(states[i])) << '\n';
    }
    break;
  case Format::JsonLines:
    for (std::size_t i = 0; i < states.size(); ++i) {
      json row{{"step", i}, {"parts", parts_json(states[i])}};
      if (i > 0) {
        const GlaisherStep &s = trace.steps[i - 1];
        row["k"] = s.k;
        row["direction"] = s.direction == StepDirection::Merge ? "merge" : "split";
      }
      out << row.dump() << '\n';
    }
    out << json{{"count", trace.count()},
                {"end", parts_json(trace.end)},
                {"chain", chain_text(states)}}
               .dump()
        << '\n';
    break;
  }
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string scope = "all";
  std::string moduli;
  std::string n;
  std::int64_t trunc = 60;
  bool force = false;
};

const char *xyc_status(const XYCVerification &v, const XYCVerdict &row) {
  if (!v.report.hypothesis_holds)
    return "info";
  return row.pass && row.inferior_matches && v.c_matches_inferior ? "pass" : "fail";
}

bool emit_xyc(const ModulusTuple &r, NRange range, Format format, std::ostream &out) {
  bool ok = true;
  if (format == Format::Csv)
    out << "moduli,n,j,X,Y,diff,c,inferior,hypothesis,pass\n";
  for (std::int64_t n = range.lo; n <= range.hi; ++n) {
    const XYCVerification v = verify_xyc(r, n);
    ok = ok && !v.genuine_failure();
    for (const XYCVerdict &row : v.verdicts) {
      const char *status = xyc_status(v, row);
      switch (format) {
      case Format::Plain:
        out << "xyc moduli=" << r.to_string() << " n=" << n << " j=" << row.j << ": X=" << row.x
            << " Y=" << row.y << " X-Y=" << row.x - row.y << " c=" << row.c
            << " inferior=" << row.inferior << ' ' << status;
        if (!v.report.hypothesis_holds)
          out << " (hypothesis_holds=false: tail moduli not all 1 mod " << r.first() << ")";
        out << '\n';
        break;
      case Format::Csv:
        out << csv_field(r.to_string()) << ',' << n << ',' << row.j << ',' << row.x << ','
            << row.y << ',' << row.x - row.y << ',' << row.c << ',' << row.inferior << ','
            << bool_text(v.report.hypothesis_holds) << ',' << status << '\n';
        break;
      case Format::JsonLines:
        out << json{{"check", "xyc"},     {"moduli", moduli_json(r)},
                    {"n", n},             {"j", row.j},
                    {"X", row.x},         {"Y", row.y},
                    {"diff", row.x - row.y}, {"c", row.c},
                    {"inferior", row.inferior}, {"hypothesis", v.report.hypothesis_holds},
                    {"pass", status}}
                   .dump()
            << '\n';
        break;
      }
    }
  }
  return ok;
}

bool emit_length(const ModulusTuple &r, NRange range, Format format, std::ostream &out) {
  bool ok = true;
  if (format == Format::Csv)
    out << "moduli,n,cp_length,rp_length,diff,c,pass\n";
  for (std::int64_t n = range.lo; n <= range.hi; ++n) {
    const LengthVerdict v = verify_length_identity(r, n);
    ok = ok && v.pass;
    const std::int64_t diff = v.class_regular_length - v.regular_length;
    const char *status = v.pass ? "pass" : "fail";
    switch (format) {
    case Format::Plain:
      out << "length moduli=" << r.to_string() << " n=" << n << ": " << v.class_regular_length
          << " - " << v.regular_length << " = " << diff << ", (" << r.first() << "-1)*c = "
          << (r.first() - 1) * v.c << ' ' << status << '\n';
      break;
    case Format::Csv:
      out << csv_field(r.to_string()) << ',' << n << ',' << v.class_regular_length << ','
          << v.regular_length << ',' << diff << ',' << v.c << ',' << status << '\n';
      break;
    case Format::JsonLines:
      out << json{{"check", "length"},
                  {"moduli", moduli_json(r)},
                  {"n", n},
                  {"cp_length", v.class_regular_length},
                  {"rp_length", v.regular_length},
                  {"diff", diff},
                  {"c", v.c},
                  {"pass", status}}
                 .dump()
          << '\n';
      break;
    }
  }
  return ok;
}

std::string opt_text(const std::optional<std::int64_t> &v) {
  return v ? std::to_string(*v) : std::string();
}

json opt_json(const std::optional<std::int64_t> &v) { return v ? json(*v) : json(nullptr); }

bool emit_series(const ModulusTuple &r, std::size_t trunc, Format format, std::ostream &out) {
  bool ok = true;
  if (format == Format::Csv)
    out << "moduli,class,degree,coefficient,count,ops,regular,pass\n";
  const PartitionClass classes[] = {PartitionClass::all(), PartitionClass::class_regular(r),
                                    PartitionClass::regular(r), PartitionClass::inferior(r)};
  for (const PartitionClass &cls : classes) {
    const SeriesVerification v = verify_series_vs_enumeration(cls, trunc);
    ok = ok && v.pass();
    const std::string label = cls.kind == ClassKind::All ? "" : r.to_string();
    for (const SeriesDegreeCheck &row : v.degrees) {
      const char *status = row.pass ? "pass" : "fail";
      switch (format) {
      case Format::Plain:
        out << "series class=" << to_string(cls.kind);
        if (!label.empty())
          out << " moduli=" << label;
        out << " degree=" << row.degree << ": coefficient=" << row.coefficient
            << " count=" << row.count;
        if (row.glaisher_ops)
          out << " ops=" << *row.glaisher_ops << " regular=" << *row.regular_count;
        out << ' ' << status << '\n';
        break;
      case Format::Csv:
        out << csv_field(label) << ',' << to_string(cls.kind) << ',' << row.degree << ','
            << row.coefficient << ',' << row.count << ',' << opt_text(row.glaisher_ops) << ','
            << opt_text(row.regular_count) << ',' << status << '\n';
        break;
      case Format::JsonLines:
        out << json{{"check", "series"},
                    {"moduli", cls.kind == ClassKind::All ? json::array() : moduli_json(r)},
                    {"class", to_string(cls.kind)},
                    {"degree", row.degree},
                    {"coefficient", row.coefficient},
                    {"count", row.count},
                    {"ops", opt_json(row.glaisher_ops)},
                    {"regular", opt_json(row.regular_count)},
                    {"pass", status}}
                   .dump()
            << '\n';
        break;
      }
    }
    if (cls.kind == ClassKind::InferiorRegular) {
      // The inferior-class series is sometimes quoted as counting the
      // regular class; record where that reading breaks.
      const auto &m = v.regular_reading_mismatch;
      if (format == Format::Plain) {
        out << "note class=irp moduli=" << label
            << ": coefficients count inferior regular partitions";
        if (m)
          out << "; they differ from the regular-partition count from degree " << *m;
        out << '\n';
      } else if (format == Format::JsonLines) {
        out << json{{"check", "series-note"},
                    {"moduli", moduli_json(r)},
                    {"class", "irp"},
                    {"counts", "inferior"},
                    {"regular_mismatch_degree", m ? json(*m) : json(nullptr)}}
                   .dump()
            << '\n';
      }
    }
  }
  return ok;
}

int cmd_verify(const VerifyArgs &args, Format format, std::ostream &out) {
  static const std::vector<std::string> scopes = {"xyc", "length", "series", "all"};
  if (std::find(scopes.begin(), scopes.end(), args.scope) == scopes.end())
    throw BadArgument("unknown scope '" + args.scope + "'");
  if (args.moduli.empty())
    throw BadArgument("verify needs --moduli");
  const ModulusTuple r = parse_moduli(args.moduli);
  const bool wants_n = args.scope != "series";
  const bool wants_series = args.scope == "series" || args.scope == "all";
  NRange range;
  if (wants_n) {
    if (args.n.empty())
      throw BadArgument("scope " + args.scope + " needs --n");
    range = parse_n_range(args.n);
    guard_size(range.hi, args.force);
  }
  if (wants_series)
    guard_truncation(args.trunc, args.force);

  bool ok = true;
  if (args.scope == "xyc" || args.scope == "all")
    ok = emit_xyc(r, range, format, out) && ok;
  if (args.scope == "length" || args.scope == "all") {
    if (format == Format::Csv && args.scope == "all")
      out << '\n';
    ok = emit_length(r, range, format, out) && ok;
  }
  if (wants_series) {
    if (format == Format::Csv && args.scope == "all")
      out << '\n';
    ok = emit_series(r, static_cast<std::size_t>(args.trunc), format, out) && ok;
  }
  return ok ? kExitOk : kExitIdentityFailure;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Regular, class-regular and inferior regular partitions: enumeration, "
               "Glaisher traces and identity checks"};
  app.require_subcommand(1);

  std::string format_name = "plain";
  app.add_option("--format", format_name, "plain, csv or json-lines")
      ->check(CLI::IsMember({"plain", "csv", "json-lines"}))
      ->capture_default_str();

  EnumerateArgs en;
  auto *enumerate = app.add_subcommand("enumerate", "List the partitions of n in a class");
  enumerate->add_option("--class", en.cls, "all, rp, cp or irp")->capture_default_str();
  enumerate->add_option("--moduli", en.moduli, "Comma-separated moduli, first one is r_1");
  enumerate->add_option("--n", en.n, "Partition size")->required();
  enumerate->add_flag("--force", en.force, "Allow n above the interactive limit");

  GlaisherArgs gl;
  auto *glaisher = app.add_subcommand("glaisher", "Trace the Glaisher map or its inverse");
  glaisher->add_option("--parts", gl.parts, "Comma-separated parts in any order")->required();
  glaisher->add_option("--r", gl.r, "Modulus")->required();
  glaisher->add_flag("--inverse", gl.inverse, "Split instead of merge");

  VerifyArgs ve;
  auto *verify = app.add_subcommand("verify", "Check the identities by enumeration");
  verify->add_option("--scope", ve.scope, "xyc, length, series or all")->capture_default_str();
  verify->add_option("--moduli", ve.moduli, "Comma-separated moduli, first one is r_1");
  verify->add_option("--n", ve.n, "A size like 7 or a range like 0..30");
  verify->add_option("--trunc", ve.trunc, "Series truncation degree")->capture_default_str();
  verify->add_flag("--force", ve.force, "Allow sizes above the interactive limits");

  for (auto *sub : {enumerate, glaisher, verify})
    sub->add_option("--format", format_name, "plain, csv or json-lines")
        ->check(CLI::IsMember({"plain", "csv", "json-lines"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitBadArguments;
  }

  const Format format = format_name == "csv"          ? Format::Csv
                        : format_name == "json-lines" ? Format::JsonLines
                                                      : Format::Plain;
  try {
    if (*enumerate)
      return cmd_enumerate(en, format, out);
    if (*glaisher)
      return cmd_glaisher(gl, format, out);
    return cmd_verify(ve, format, out);
  } catch (const BadArgument &e) {
    err << "error: " << e.what() << '\n';
    return kExitBadArguments;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Overflow ? kExitIdentityFailure : kExitBadArguments;
  }
}

} // namespace rpart::cli
