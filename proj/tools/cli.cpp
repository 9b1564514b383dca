#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "sympcoh/acx.hpp"
#include "sympcoh/errors.hpp"
#include "sympcoh/morphism.hpp"
#include "sympcoh/parser.hpp"
#include "sympcoh/symplectic.hpp"

namespace sympcoh::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidStructure("cannot read '" + path + "' (not a file and not a catalog name)");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t max_dim() {
  if (const char* env = std::getenv("SYMPCOH_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 16;
}

void check_size(const InputDocument& doc) {
  const std::size_t limit = max_dim();
  if (doc.algebra.dim() > limit)
    throw InvalidStructure("dimension " + std::to_string(doc.algebra.dim()) + " exceeds SYMPCOH_MAX_DIM = " +
                           std::to_string(limit));
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Matrix parse_matrix(std::string_view text) {
  std::vector<Vector> rows;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c) throw ParseError(std::string("expected '") + c + "'", i);
    ++i;
  };
  expect('[');
  skip_ws();
  while (true) {
    expect('[');
    Vector row;
    while (true) {
      skip_ws();
      const std::size_t start = i;
      while (i < text.size() && text[i] != ',' && text[i] != ']') ++i;
      const std::string cell = trim(text.substr(start, i - start));
      if (cell.empty()) throw ParseError("empty matrix entry", start);
      try {
        row.push_back(parse_rational(cell));
      } catch (const ParseError&) {
        throw ParseError("bad matrix entry '" + cell + "'", start);
      }
      if (i >= text.size()) throw ParseError("unterminated row", i);
      if (text[i++] == ']') break;
    }
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("ragged matrix rows", i);
    rows.push_back(std::move(row));
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    expect(']');
    break;
  }
  skip_ws();
  if (i != text.size()) throw ParseError("trailing characters after matrix", i);
  return Matrix::from_rows(rows, rows.front().size());
}

InputDocument parse_input(std::string_view text, std::string label) {
  InputDocument doc;
  doc.label = std::move(label);
  std::optional<std::size_t> dim;
  std::optional<std::string> d_text, omega_text, j_text;
  const CatalogEntry* base = nullptr;

  std::size_t line_no = 0;
  std::istringstream lines{std::string(text)};
  for (std::string raw; std::getline(lines, raw);) {
    ++line_no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'", 0);
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "name") {
      doc.label = value;
      if (catalog::contains(value)) base = &catalog::get(value);
    } else if (key == "dim") {
      try {
        std::size_t used = 0;
        dim = std::stoul(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": dim must be a nonnegative integer", eq + 1);
      }
    } else if (key == "d") {
      d_text = value;
    } else if (key == "omega") {
      omega_text = value;
    } else if (key == "J") {
      j_text = value;
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'", 0);
    }
  }

  if (d_text) {
    doc.algebra = parse_salamon(*d_text);
  } else if (base) {
    doc.algebra = base->algebra;
  } else {
    throw ParseError("missing 'd = (...)' structure equations", 0);
  }
  const std::size_t n = doc.algebra.dim();
  if (dim && *dim != n)
    throw InvalidStructure("dim = " + std::to_string(*dim) + " but d lists " + std::to_string(n) + " entries");

  if (omega_text) {
    doc.omega = parse_form(*omega_text, n, 2);
  } else if (base && !d_text) {
    doc.omega = base->default_omega;
  }
  if (j_text) {
    doc.j = parse_matrix(*j_text);
  } else if (base && !d_text) {
    doc.j = base->default_j;
  }
  return doc;
}

InputDocument load_input(const std::string& source) {
  InputDocument doc;
  if (catalog::contains(source)) {
    const CatalogEntry& e = catalog::get(source);
    doc.label = e.name;
    doc.algebra = e.algebra;
    doc.omega = e.default_omega;
    doc.j = e.default_j;
  } else {
    doc = parse_input(read_file(source), source);
  }
  check_size(doc);
  return doc;
}

Matrix parse_map_file(std::string_view text) {
  std::optional<std::size_t> rows, cols;
  std::vector<Vector> data;
  std::size_t line_no = 0;
  std::istringstream lines{std::string(text)};
  for (std::string raw; std::getline(lines, raw);) {
    ++line_no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq != std::string::npos) {
      const std::string key = trim(std::string_view(line).substr(0, eq));
      const std::string value = trim(std::string_view(line).substr(eq + 1));
      std::size_t parsed = 0;
      try {
        std::size_t used = 0;
        parsed = std::stoul(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw ParseError("map line " + std::to_string(line_no) + ": expected an integer", eq + 1);
      }
      if (key == "rows") {
        rows = parsed;
      } else if (key == "cols") {
        cols = parsed;
      } else {
        throw ParseError("map line " + std::to_string(line_no) + ": unknown key '" + key + "'", 0);
      }
      continue;
    }
    if (!rows || !cols) throw ParseError("map file must start with 'rows = n' and 'cols = m'", 0);
    std::string cells = line;
    std::replace(cells.begin(), cells.end(), ',', ' ');
    std::istringstream tokens(cells);
    Vector row;
    for (std::string tok; tokens >> tok;) row.push_back(parse_rational(tok));
    if (row.size() != *cols)
      throw ParseError("map line " + std::to_string(line_no) + ": expected " + std::to_string(*cols) + " entries", 0);
    data.push_back(std::move(row));
  }
  if (!rows || !cols) throw ParseError("map file must declare 'rows = n' and 'cols = m'", 0);
  if (data.size() != *rows)
    throw ParseError("map file declares " + std::to_string(*rows) + " rows but has " + std::to_string(data.size()), 0);
  Matrix m(*rows, *cols);
  for (std::size_t r = 0; r < *rows; ++r)
    for (std::size_t c = 0; c < *cols; ++c) m(r, c) = data[r][c];
  return m;
}

namespace {

SymplecticStructure require_symplectic(const InputDocument& doc) {
  if (!doc.omega) throw InvalidStructure(doc.label + ": no symplectic form given (omega)");
  return SymplecticStructure::make(doc.algebra, *doc.omega);
}

AlmostComplexStructure require_acs(const InputDocument& doc) {
  if (!doc.j) throw InvalidStructure(doc.label + ": no almost-complex structure given (J)");
  return AlmostComplexStructure::make(doc.algebra, *doc.j);
}

void render_report(std::ostream& out, const InputDocument& doc, const CohomologyReport& r, bool tsv) {
  const bool nilpotent = is_nilpotent(doc.algebra);
  if (tsv) {
    out << "k\tb\th_dLambda\th_BC\th_A\tdelta_tilde\n";
    for (const DegreeRow& row : r.rows)
      out << row.k << '\t' << row.b << '\t' << row.h_dlambda << '\t' << row.h_bc << '\t' << row.h_a << '\t'
          << row.delta_tilde << '\n';
    out << "# HLC: " << yes_no(r.hlc) << '\n';
    out << "# ddLambda-lemma: " << yes_no(r.ddlambda_lemma) << '\n';
    out << "# scope: invariant forms\n";
    if (!nilpotent) out << "# non-nilpotent: values are invariant-level only\n";
    return;
  }
  out << doc.label << ": dim " << doc.algebra.dim() << ", omega = " << render_form(*doc.omega) << '\n';
  out << std::setw(3) << "k" << std::setw(6) << "b" << std::setw(8) << "h_dL" << std::setw(7) << "h_BC"
      << std::setw(6) << "h_A" << std::setw(8) << "dtilde" << '\n';
  for (const DegreeRow& row : r.rows)
    out << std::setw(3) << row.k << std::setw(6) << row.b << std::setw(8) << row.h_dlambda << std::setw(7)
        << row.h_bc << std::setw(6) << row.h_a << std::setw(8) << row.delta_tilde << '\n';
  for (std::size_t j = 0; j < r.lefschetz_ranks.size(); ++j)
    out << "L^" << j << " on H^" << r.half_dim - j << ": rank " << r.lefschetz_ranks[j] << ", "
        << (r.lefschetz_bijective[j] ? "bijective" : "NOT bijective") << '\n';
  out << "HLC: " << yes_no(r.hlc) << '\n';
  out << "ddLambda-lemma: " << yes_no(r.ddlambda_lemma) << '\n';
  out << "scope: invariant forms\n";
  if (!nilpotent) out << "non-nilpotent: values are invariant-level only\n";
}

int cmd_report(std::ostream& out, const std::string& input, const std::string& format) {
  const InputDocument doc = load_input(input);
  const SymplecticStructure s = require_symplectic(doc);
  render_report(out, doc, report(s), format == "tsv");
  return kExitOk;
}

int cmd_jdecomp(std::ostream& out, const std::string& input, std::size_t p, std::size_t q, bool representatives) {
  const InputDocument doc = load_input(input);
  const AlmostComplexStructure a = require_acs(doc);
  const PureTypeGroup g = h_j(a, p, q, representatives);
  out << doc.label << ": h_J^(" << p << "," << q << ")";
  if (p != q) out << ",(" << q << "," << p << ")";
  out << " = " << g.dim << '\n';
  for (const KForm& form : g.representatives) out << "  " << render_form(form) << '\n';
  if (doc.algebra.dim() >= 2) {
    const PureFull pf = pure_full_check(a);
    out << "h_J^(1,1) = " << pf.h_invariant << ", h_J^(2,0),(0,2) = " << pf.h_anti_invariant << ", b2 = " << pf.b2
        << '\n';
    out << "C-infinity pure: " << yes_no(pf.pure) << '\n';
    out << "C-infinity full: " << yes_no(pf.full) << '\n';
  }
  out << "scope: invariant forms\n";
  if (!is_nilpotent(doc.algebra)) out << "non-nilpotent: values are invariant-level only\n";
  return kExitOk;
}

int cmd_pullback(std::ostream& out, const std::string& source, const std::string& target, const std::string& map_path,
                 const std::string& theory_name, std::optional<std::size_t> degree) {
  const InputDocument src = load_input(source);
  const InputDocument tgt = load_input(target);
  const LieMorphism f(src.algebra, tgt.algebra, parse_map_file(read_file(map_path)));

  TheoryDegree theory;
  theory.theory = parse_theory(theory_name, &theory.p, &theory.q);
  if (theory.theory == Theory::pure_type) {
    theory.degree = theory.p + theory.q;
    if (degree && *degree != theory.degree)
      throw ParseError("--degree " + std::to_string(*degree) + " disagrees with " + theory_name, 0);
  } else {
    if (!degree) throw ParseError("--degree is required for " + theory_name, 0);
    theory.degree = *degree;
  }

  MorphismStructures structures;
  switch (theory.theory) {
    case Theory::de_rham:
      break;
    case Theory::pure_type:
      structures.source_j = require_acs(src);
      structures.target_j = require_acs(tgt);
      break;
    default:
      structures.source_omega = require_symplectic(src);
      structures.target_omega = require_symplectic(tgt);
      break;
  }
  const InjectivityReport r = induced_report(f, theory, structures);
  out << "pullback " << tgt.label << " -> " << src.label << ", " << to_string(r.theory) << " degree "
      << r.theory.degree << '\n';
  out << "group dims: " << r.source_dim << " on " << tgt.label << ", " << r.target_dim << " on " << src.label << '\n';
  out << "rank " << r.rank << '/' << r.source_dim << ' ' << (r.injective ? "injective" : "NOT injective") << '\n';
  return kExitOk;
}

int cmd_validate(std::ostream& out, const std::string& input) {
  const InputDocument doc = load_input(input);
  bool ok = true;
  out << doc.label << ": dim " << doc.algebra.dim() << '\n';
  if (auto failure = validate(doc.algebra)) {
    out << "Jacobi: FAILS at e" << failure->generator << ", d(de" << failure->generator
        << ") = " << render_form(failure->residual) << '\n';
    return kExitSemantic;
  }
  out << "Jacobi: ok\n";
  out << "nilpotent: " << yes_no(is_nilpotent(doc.algebra)) << '\n';
  out << "betti:";
  for (std::size_t b : betti(doc.algebra)) out << ' ' << b;
  out << '\n';
  if (doc.omega) {
    try {
      SymplecticStructure::make(doc.algebra, *doc.omega);
      out << "omega: symplectic\n";
    } catch (const InvalidStructure& e) {
      out << "omega: " << e.what() << '\n';
      ok = false;
    }
  } else {
    out << "omega: none\n";
  }
  if (doc.j) {
    if (auto defect = validate_acs(doc.algebra, *doc.j)) {
      out << "J: " << defect->message << '\n';
      ok = false;
    } else {
      out << "J: ok\n";
      if (doc.omega && doc.omega->degree() == 2 && doc.omega->ambient_dim() == doc.algebra.dim())
        out << "omega vs J: " << to_string(compatibility(*doc.omega, *doc.j)) << '\n';
    }
  } else {
    out << "J: none\n";
  }
  return ok ? kExitOk : kExitSemantic;
}

int cmd_catalog_list(std::ostream& out) {
  for (const std::string& name : catalog::names()) {
    const CatalogEntry& e = catalog::get(name);
    out << name << '\t' << e.algebra.dim() << '\t' << render_salamon(e.algebra) << '\t'
        << (e.default_omega ? render_form(*e.default_omega) : "-") << '\t' << (e.default_j ? "J" : "-") << '\t'
        << (e.nilpotent ? "nilpotent" : "solvable") << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant symplectic and almost-complex cohomology of Lie algebras", "sympcoh"};
  app.require_subcommand(1);

  std::string input, format = "table";
  auto* report_cmd = app.add_subcommand("report", "de Rham, d^Lambda, Bott-Chern and Aeppli dimensions");
  report_cmd->add_option("input", input, "catalog name or input file")->required();
  report_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "tsv"}));

  std::size_t p = 0, q = 0;
  bool representatives = false;
  auto* jdecomp_cmd = app.add_subcommand("jdecomp", "pure-type cohomology H_J^(p,q),(q,p)");
  jdecomp_cmd->add_option("input", input, "catalog name or input file")->required();
  jdecomp_cmd->add_option("--p", p)->required();
  jdecomp_cmd->add_option("--q", q)->required();
  jdecomp_cmd->add_flag("--with-representatives", representatives);

  std::string source, target, map_path, theory = "deRham";
  std::optional<std::size_t> degree;
  auto* pullback_cmd = app.add_subcommand("pullback", "rank of the induced map on cohomology");
  pullback_cmd->add_option("source", source, "covering algebra (domain of the Lie algebra map)")->required();
  pullback_cmd->add_option("target", target, "base algebra")->required();
  pullback_cmd->add_option("map", map_path, "map file: rows = dim target, cols = dim source")->required();
  pullback_cmd->add_option("--theory", theory, "deRham, dLambda, BottChern, Aeppli or J(p,q)");
  pullback_cmd->add_option("--degree", degree);

  auto* validate_cmd = app.add_subcommand("validate", "check Jacobi, omega and J");
  validate_cmd->add_option("input", input, "catalog name or input file")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "built-in examples");
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list catalog entries");
  catalog_cmd->require_subcommand(1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitSyntax;
  }

  try {
    if (report_cmd->parsed()) return cmd_report(out, input, format);
    if (jdecomp_cmd->parsed()) return cmd_jdecomp(out, input, p, q, representatives);
    if (pullback_cmd->parsed()) return cmd_pullback(out, source, target, map_path, theory, degree);
    if (validate_cmd->parsed()) return cmd_validate(out, input);
    if (list_cmd->parsed()) return cmd_catalog_list(out);
  } catch (const ParseError& e) {
    err << "syntax error: " << e.what() << '\n';
    return kExitSyntax;
  } catch (const HypothesisViolation& e) {
    err << "hypothesis violated: " << e.what() << '\n';
    return kExitHypothesis;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitSemantic;
  }
  return kExitSyntax;
}

}  // namespace sympcoh::cli
