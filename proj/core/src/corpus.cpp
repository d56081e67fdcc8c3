#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "reppow/corpus.hpp"
#include "reppow/errors.hpp"
#include "reppow/verify.hpp"

namespace reppow {

namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char ch) { return !std::isspace(ch); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string unquote(std::string s) {
  s = trim(std::move(s));
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

[[noreturn]] void malformed(std::size_t line, const std::string& why) {
  throw Error(Errc::malformed_corpus, "line " + std::to_string(line) + ": " + why);
}

mpz_class integer_field(const std::string& text, std::size_t line, const char* what) {
  mpz_class v;
  if (text.empty() || v.set_str(text, 10) != 0) malformed(line, std::string("bad ") + what + " '" + text + "'");
  return v;
}

unsigned long small_field(const std::string& text, std::size_t line, const char* what) {
  const mpz_class v = integer_field(text, line, what);
  if (v < 0 || !v.fits_ulong_p()) malformed(line, std::string(what) + " out of range");
  return v.get_ui();
}

// Splits off the first `count` comma-separated fields; the remainder is the last one.
std::vector<std::string> split_fields(const std::string& line, std::size_t count) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto comma = line.find(',', pos);
    if (comma == std::string::npos) break;
    out.push_back(trim(line.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  out.push_back(trim(line.substr(pos)));
  return out;
}

// Digits only; digit-range rules are left to the verifier so a bad row is
// reported rather than rejected.
Word loose_word(NumberSystem system, const mpz_class& base, const std::string& text, std::size_t line) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  std::vector<mpz_class> digits;
  if (system == NumberSystem::zeckendorf) {
    for (char ch : s) {
      if (ch != '0' && ch != '1') malformed(line, "non-binary Zeckendorf word '" + text + "'");
      digits.emplace_back(ch - '0');
    }
    return Word{system, 0, std::move(digits)};
  }
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') malformed(line, "expected (d1,...) word");
  std::stringstream body(s.substr(1, s.size() - 2));
  std::string token;
  while (std::getline(body, token, ',')) digits.push_back(integer_field(token, line, "digit"));
  return Word{system, base, std::move(digits)};
}

CorpusRow solution_row(const std::string& text, std::size_t line) {
  const auto f = split_fields(text, 6);
  if (f.size() != 7) malformed(line, "expected 7 fields");
  NumberSystem system;
  try {
    system = parse_system(f[0]);
  } catch (const Error&) {
    malformed(line, "unknown system '" + f[0] + "'");
  }
  const unsigned long q = small_field(f[1], line, "q");
  const unsigned long n = small_field(f[2], line, "n");
  const unsigned long l = small_field(f[3], line, "l");
  const mpz_class y = integer_field(f[5], line, "y");
  const std::string wtext = unquote(f[6]);

  CorpusRow row;
  row.line = line;
  if (system == NumberSystem::canonical) {
    const mpz_class b = integer_field(f[4], line, "b");
    Word w = loose_word(system, b, wtext, line);
    mpz_class c = 0;
    for (const auto& d : w.digits) c = c * b + d;
    row.solution = SolutionRecord{Triple{q, n, l}, b, y, c, std::move(w)};
  } else {
    const mpz_class b = system == NumberSystem::zeckendorf ? mpz_class(0) : integer_field(f[4], line, "b");
    row.repr = ReprSolution{system, b, q, n, y, loose_word(system, b, wtext, line)};
    row.declared_length = l;
  }
  return row;
}

CorpusRow family_row(const std::string& text, std::size_t line) {
  const auto f = split_fields(text, 2);
  if (f.size() != 3) malformed(line, "expected 3 fields");
  CorpusRow row;
  row.line = line;
  row.family = BijectiveFamilyRow{small_field(f[0], line, "b"), unquote(f[1]), unquote(f[2])};
  // syntax check up front
  try {
    expand_pattern(row.family->y_pattern, 0);
    expand_pattern(row.family->w_pattern, 0);
  } catch (const Error& e) {
    malformed(line, e.what());
  }
  return row;
}

}  // namespace

std::size_t CorpusReport::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const RowResult& r) {
    return r.failure.has_value();
  }));
}

TableCorpus read_corpus(std::istream& in, const std::string& default_name) {
  TableCorpus corpus;
  corpus.name = default_name;
  enum class Layout { unknown, solutions, families } layout = Layout::unknown;

  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const std::string t = trim(text);
    if (t.empty()) continue;
    if (t.front() == '#') {
      const std::string meta = trim(t.substr(1));
      if (meta.rfind("name:", 0) == 0) corpus.name = trim(meta.substr(5));
      if (meta.rfind("source:", 0) == 0) corpus.source = trim(meta.substr(7));
      continue;
    }
    if (layout == Layout::unknown) {
      std::string header;
      std::remove_copy_if(t.begin(), t.end(), std::back_inserter(header),
                          [](unsigned char ch) { return std::isspace(ch); });
      if (header == "system,q,n,l,b,y,w") {
        layout = Layout::solutions;
      } else if (header == "b,y_pattern,w_pattern") {
        layout = Layout::families;
      } else {
        malformed(line, "unrecognized header '" + t + "'");
      }
      continue;
    }
    corpus.rows.push_back(layout == Layout::solutions ? solution_row(t, line) : family_row(t, line));
  }
  return corpus;
}

TableCorpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::malformed_corpus, "cannot open " + path.string());
  return read_corpus(in, path.stem().string());
}

std::vector<TableCorpus> load_corpus_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<TableCorpus> out;
  for (const auto& f : files) out.push_back(load_corpus(f));
  return out;
}

CorpusReport verify_corpus(const TableCorpus& corpus, unsigned long family_n_max) {
  CorpusReport report;
  report.name = corpus.name;
  for (const auto& row : corpus.rows) {
    RowResult r;
    r.line = row.line;
    if (row.solution) {
      const auto& s = *row.solution;
      r.label = format_triple(s.triple) + " b=" + s.b.get_str() + " y=" + s.y.get_str();
      r.failure = solution_failure(s);
    } else if (row.repr) {
      const auto& s = *row.repr;
      r.label = std::string(system_name(s.system)) + " y=" + s.y.get_str();
      if (row.declared_length && *row.declared_length != s.w.size()) {
        r.failure = "|w| = l";
      } else {
        r.failure = repr_failure(s);
      }
    } else if (row.family) {
      r.label = "bijective b=" + std::to_string(row.family->base) + " " + row.family->y_pattern;
      for (unsigned long n = 0; n <= family_n_max && !r.failure; ++n) {
        try {
          instantiate_bijective_row(*row.family, n);
        } catch (const Error& e) {
          r.failure = std::string("n=") + std::to_string(n) + ": " + e.what();
        }
      }
    }
    report.rows.push_back(std::move(r));
  }
  return report;
}

void print_report(std::ostream& out, const CorpusReport& report, bool verbose) {
  for (const auto& r : report.rows) {
    if (r.failure) {
      out << "FAIL line " << r.line << " " << r.label << ": " << *r.failure << '\n';
    } else if (verbose) {
      out << "ok   line " << r.line << " " << r.label << '\n';
    }
  }
  out << report.name << ": " << (report.rows.size() - report.failures()) << "/" << report.rows.size()
      << " rows pass\n";
}

}  // namespace reppow
