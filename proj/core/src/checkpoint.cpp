#include "reppow/checkpoint.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "reppow/errors.hpp"
#include "reppow/verify.hpp"

namespace reppow {

using nlohmann::json;

namespace {

std::string u64_str(std::uint64_t v) { return std::to_string(v); }

std::uint64_t parse_u64(const json& j, std::size_t line) {
  if (!j.is_string()) throw Error(Errc::checkpoint_error, "line " + std::to_string(line) + ": expected decimal string");
  const auto s = j.get<std::string>();
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw Error(Errc::checkpoint_error, "line " + std::to_string(line) + ": bad integer '" + s + "'");
  }
  return v;
}

mpz_class parse_mpz(const json& j, std::size_t line) {
  mpz_class v;
  if (!j.is_string() || v.set_str(j.get<std::string>(), 10) != 0) {
    throw Error(Errc::checkpoint_error, "line " + std::to_string(line) + ": bad integer");
  }
  return v;
}

json solution_json(const SolutionRecord& rec) {
  return json{{"q", std::to_string(rec.triple.q)},
              {"n", std::to_string(rec.triple.n)},
              {"l", std::to_string(rec.triple.l)},
              {"b", rec.b.get_str()},
              {"y", rec.y.get_str()},
              {"c", rec.c.get_str()},
              {"w", format_digits(rec.w)}};
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string checkpoint_header_line(const Triple& t) {
  return json{{"triple", {std::to_string(t.q), std::to_string(t.n), std::to_string(t.l)}}}.dump();
}

std::string checkpoint_range_line(const BaseRange& r) {
  return json{{"range", {u64_str(r.lo), u64_str(r.hi)}}}.dump();
}

std::string checkpoint_solution_line(const SolutionRecord& rec) {
  return json{{"solution", solution_json(rec)}}.dump();
}

std::string checkpoint_unresolved_line(std::uint64_t b) { return json{{"unresolved", u64_str(b)}}.dump(); }

Checkpoint read_checkpoint(std::istream& in) {
  Checkpoint cp;
  bool have_triple = false;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.empty()) continue;
    const auto where = "line " + std::to_string(line) + ": ";
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || j.size() != 1) {
      throw Error(Errc::checkpoint_error, where + "not a checkpoint record");
    }
    try {
      if (j.contains("triple")) {
        const auto& a = j["triple"];
        if (!a.is_array() || a.size() != 3 || have_triple) throw Error(Errc::checkpoint_error, where + "bad triple");
        cp.triple = make_triple(parse_u64(a[0], line), parse_u64(a[1], line), parse_u64(a[2], line));
        have_triple = true;
      } else if (!have_triple) {
        throw Error(Errc::checkpoint_error, where + "missing triple header");
      } else if (j.contains("range")) {
        const auto& a = j["range"];
        if (!a.is_array() || a.size() != 2) throw Error(Errc::checkpoint_error, where + "bad range");
        BaseRange r{parse_u64(a[0], line), parse_u64(a[1], line)};
        if (r.lo < 2 || r.lo > r.hi) throw Error(Errc::checkpoint_error, where + "empty or invalid range");
        cp.completed_ranges.push_back(r);
      } else if (j.contains("solution")) {
        const auto& s = j["solution"];
        if (!s.is_object()) throw Error(Errc::checkpoint_error, where + "bad solution");
        const Triple t = make_triple(parse_u64(s.at("q"), line), parse_u64(s.at("n"), line), parse_u64(s.at("l"), line));
        if (t != cp.triple) throw Error(Errc::checkpoint_error, where + "solution for a different triple");
        const mpz_class b = parse_mpz(s.at("b"), line);
        SolutionRecord rec{t, b, parse_mpz(s.at("y"), line), parse_mpz(s.at("c"), line),
                           parse_word(s.at("w").get<std::string>(), NumberSystem::canonical, b)};
        if (auto why = solution_failure(rec)) {
          throw Error(Errc::checkpoint_error, where + "stored solution fails '" + *why + "'");
        }
        cp.solutions.push_back(std::move(rec));
      } else if (j.contains("unresolved")) {
        cp.unresolved_bases.push_back(parse_u64(j["unresolved"], line));
      } else {
        throw Error(Errc::checkpoint_error, where + "unknown record kind");
      }
    } catch (const Error& e) {
      if (e.code() == Errc::checkpoint_error) throw;
      throw Error(Errc::checkpoint_error, where + e.what());
    } catch (const json::exception& e) {
      throw Error(Errc::checkpoint_error, where + e.what());
    }
  }
  if (!have_triple) throw Error(Errc::checkpoint_error, "empty checkpoint");
  cp.normalize();
  return cp;
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::checkpoint_error, "cannot read " + path.string());
  return read_checkpoint(in);
}

void write_checkpoint(std::ostream& out, const Checkpoint& cp) {
  out << checkpoint_header_line(cp.triple) << '\n';
  for (const auto& s : cp.solutions) out << checkpoint_solution_line(s) << '\n';
  for (auto b : cp.unresolved_bases) out << checkpoint_unresolved_line(b) << '\n';
  for (const auto& r : cp.completed_ranges) out << checkpoint_range_line(r) << '\n';
}

void write_solutions_csv(std::ostream& out, const std::vector<SolutionRecord>& records, bool header) {
  if (header) out << "q,n,l,b,y,c,w\n";
  for (const auto& r : records) {
    out << r.triple.q << ',' << r.triple.n << ',' << r.triple.l << ',' << r.b.get_str() << ',' << r.y.get_str()
        << ',' << r.c.get_str() << ',' << csv_quote(format_digits(r.w)) << '\n';
  }
}

void write_solutions_jsonl(std::ostream& out, const std::vector<SolutionRecord>& records) {
  for (const auto& r : records) out << json{{"solution", solution_json(r)}}.dump() << '\n';
}

void write_repr_csv(std::ostream& out, const std::vector<ReprSolution>& records, bool header) {
  if (header) out << "system,q,n,b,y,w\n";
  for (const auto& r : records) {
    out << system_name(r.system) << ',' << r.q << ',' << r.n << ','
        << (r.system == NumberSystem::zeckendorf ? std::string() : r.base.get_str()) << ',' << r.y.get_str() << ','
        << csv_quote(format_digits(r.w)) << '\n';
  }
}

void write_repr_jsonl(std::ostream& out, const std::vector<ReprSolution>& records) {
  for (const auto& r : records) {
    json j{{"system", system_name(r.system)}, {"q", std::to_string(r.q)}, {"n", std::to_string(r.n)},
           {"y", r.y.get_str()},          {"w", format_digits(r.w)}};
    if (r.system != NumberSystem::zeckendorf) j["b"] = r.base.get_str();
    out << json{{"repr_solution", j}}.dump() << '\n';
  }
}

}  // namespace reppow
