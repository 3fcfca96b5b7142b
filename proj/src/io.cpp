#include "polarline/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace polarline {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      if (i == raw.size()) break;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (line.tokens.empty() || line.tokens.front().text.front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

Error syntax(std::size_t line, std::size_t column, const std::string& what) {
  return Error(ErrorCode::SyntaxError, "line " + std::to_string(line) +
                                           ", column " +
                                           std::to_string(column) + ": " +
                                           what);
}

std::size_t parse_count(const Line& line, const Token& t) {
  std::size_t value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw syntax(line.number, t.column,
                 "expected a non-negative integer, got '" +
                     std::string(t.text) + "'");
  }
  return value;
}

Scalar parse_position(const Line& line, const Token& t) {
  try {
    return parse_scalar(t.text);
  } catch (const Error&) {
    throw syntax(line.number, t.column,
                 "expected a rational position, got '" + std::string(t.text) +
                     "'");
  }
}

}  // namespace

Election ProfileFile::election() const {
  std::vector<Ranking> profile;
  for (const auto& g : groups) profile.insert(profile.end(), g.count, g.ranking);
  return Election(alternatives, committee_size, std::move(profile));
}

ProfileFile parse_profile_file(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw syntax(1, 1, "empty profile");
  const Line& header = lines[0];
  if (header.tokens.size() != 3) {
    throw syntax(header.number, 1, "header must read 'n m k'");
  }
  ProfileFile f;
  f.voters = parse_count(header, header.tokens[0]);
  const std::size_t m = parse_count(header, header.tokens[1]);
  f.committee_size = parse_count(header, header.tokens[2]);
  if (lines.size() < 2) {
    throw syntax(header.number + 1, 1, "missing alternative list");
  }
  const Line& ids = lines[1];
  if (ids.tokens.size() != m) {
    throw syntax(ids.number, 1,
                 "expected " + std::to_string(m) + " alternative ids, got " +
                     std::to_string(ids.tokens.size()));
  }
  std::set<std::string_view> known;
  for (const auto& t : ids.tokens) {
    if (t.text.back() == ':') {
      throw syntax(ids.number, t.column, "alternative ids may not end in ':'");
    }
    f.alternatives.emplace_back(t.text);
    known.insert(t.text);
  }
  std::size_t total = 0;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const Token& head = line.tokens.front();
    if (head.text.size() < 2 || head.text.back() != ':') {
      throw syntax(line.number, head.column,
                   "expected 'count:' at the start of a ranking line");
    }
    ProfileGroup g;
    g.count = parse_count(line, {head.text.substr(0, head.text.size() - 1),
                                 head.column});
    for (std::size_t j = 1; j < line.tokens.size(); ++j) {
      const Token& t = line.tokens[j];
      if (!known.contains(t.text)) {
        throw Error(ErrorCode::UnknownAlternative,
                    "line " + std::to_string(line.number) + ", column " +
                        std::to_string(t.column) + ": '" +
                        std::string(t.text) + "' is not an alternative");
      }
      g.ranking.emplace_back(t.text);
    }
    total += g.count;
    f.groups.push_back(std::move(g));
  }
  if (total != f.voters) {
    throw Error(ErrorCode::CountMismatch,
                "ranking counts sum to " + std::to_string(total) +
                    ", header says n=" + std::to_string(f.voters));
  }
  f.election();  // validates
  return f;
}

Election parse_profile(std::string_view text) {
  return parse_profile_file(text).election();
}

ProfileFile profile_file_of(const Election& e) {
  ProfileFile f;
  f.voters = e.voter_count();
  f.committee_size = e.committee_size();
  f.alternatives = e.alternatives();
  for (const auto& r : e.profile()) {
    if (!f.groups.empty() && f.groups.back().ranking == r) {
      ++f.groups.back().count;
    } else {
      f.groups.push_back({1, r});
    }
  }
  return f;
}

std::string serialize_profile(const ProfileFile& f) {
  std::ostringstream out;
  out << f.voters << ' ' << f.alternatives.size() << ' ' << f.committee_size
      << '\n';
  for (std::size_t i = 0; i < f.alternatives.size(); ++i) {
    out << (i ? " " : "") << f.alternatives[i];
  }
  out << '\n';
  for (const auto& g : f.groups) {
    out << g.count << ':';
    for (const auto& id : g.ranking) out << ' ' << id;
    out << '\n';
  }
  return out.str();
}

std::string serialize_profile(const Election& e) {
  return serialize_profile(profile_file_of(e));
}

LineMetric parse_metric(std::string_view text) {
  std::map<std::size_t, Scalar> voters;
  std::map<std::string, Scalar, std::less<>> alts;
  for (const Line& line : tokenize(text)) {
    const Token& kind = line.tokens.front();
    if (line.tokens.size() != 3 || (kind.text != "voter" && kind.text != "alt")) {
      throw syntax(line.number, kind.column,
                   "expected 'voter <index> <position>' or "
                   "'alt <id> <position>'");
    }
    const Token& key = line.tokens[1];
    Scalar pos = parse_position(line, line.tokens[2]);
    bool fresh;
    if (kind.text == "voter") {
      fresh = voters.emplace(parse_count(line, key), std::move(pos)).second;
    } else {
      fresh = alts.emplace(std::string(key.text), std::move(pos)).second;
    }
    if (!fresh) {
      throw syntax(line.number, key.column,
                   "duplicate record for '" + std::string(key.text) + "'");
    }
  }
  std::vector<Scalar> positions;
  for (const auto& [index, pos] : voters) {
    if (index != positions.size()) {
      throw Error(ErrorCode::MissingPosition,
                  "no position for voter " + std::to_string(positions.size()));
    }
    positions.push_back(pos);
  }
  return LineMetric(std::move(positions), std::move(alts));
}

std::string serialize_metric(const LineMetric& d) {
  std::ostringstream out;
  for (VoterIndex v = 0; v < d.voter_count(); ++v) {
    out << "voter " << v << ' ' << to_exact_string(d.voter(v)) << '\n';
  }
  for (const auto& [id, x] : d.alternative_positions()) {
    out << "alt " << id << ' ' << to_exact_string(x) << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::SyntaxError, "cannot write '" + path + "'");
  out << contents;
}

nlohmann::json scalar_json(const Scalar& x) {
  return {{"exact", to_exact_string(x)}, {"decimal", to_decimal_string(x)}};
}

nlohmann::json scalar_json(const ExtendedScalar& x) {
  return {{"exact", x.to_exact_string()}, {"decimal", x.to_decimal_string()}};
}

nlohmann::json surd_json(const QuadraticSurd& x) {
  return {{"exact", x.to_string()}, {"decimal", to_decimal_string(x)}};
}

nlohmann::json committee_json(const Committee& s) {
  return nlohmann::json(s.members());
}

nlohmann::json fixed_report(std::string_view rule, const Election& e,
                            const LineMetric& d, const FixedDistortion& fd,
                            const QuadraticSurd* bound) {
  // Independent recomputation from the per-voter definition.
  Scalar chosen = 0;
  Scalar best = 0;
  for (VoterIndex v = 0; v < e.voter_count(); ++v) {
    Scalar c = 0, o = 0;
    for (const auto& id : fd.chosen) c += abs(d.voter(v) - d.alternative(id));
    for (const auto& id : fd.optimum.committee) {
      o += abs(d.voter(v) - d.alternative(id));
    }
    if (fd.objective == Objective::UtilitarianAdditive) {
      chosen += c;
      best += o;
    } else {
      chosen = std::max(chosen, c);
      best = std::max(best, o);
    }
  }
  const ExtendedScalar ratio =
      best == 0 ? (chosen == 0 ? ExtendedScalar(Scalar(1))
                               : ExtendedScalar::infinity())
                : ExtendedScalar(Scalar(chosen / best));
  if (chosen != fd.chosen_cost || best != fd.optimum.cost ||
      ratio != fd.ratio) {
    throw Error(ErrorCode::PreconditionViolated,
                "ratio does not survive recomputation");
  }
  nlohmann::json j{
      {"rule", rule},
      {"k", e.committee_size()},
      {"committee", committee_json(fd.chosen)},
      {"objective", objective_name(fd.objective)},
      {"cost", scalar_json(fd.chosen_cost)},
      {"optimal_committee", committee_json(fd.optimum.committee)},
      {"optimal_cost", scalar_json(fd.optimum.cost)},
      {"ratio", scalar_json(fd.ratio)},
  };
  if (bound) {
    j["bound"] = surd_json(*bound);
    j["pass"] = compare(fd.ratio, *bound) <= 0;
  }
  return j;
}

nlohmann::json adversarial_report(std::string_view rule, const Election& e,
                                  const AdversarialResult& r,
                                  const Committee& s, Objective obj,
                                  const QuadraticSurd* bound,
                                  const std::string& witness_path) {
  const FixedDistortion check = distortion_fixed(e, r.witness, s, obj);
  const bool exact = r.mode == AdversaryMode::Exact;
  if (!r.ratio.is_infinite() &&
      (exact ? check.ratio != r.ratio : check.ratio < r.ratio)) {
    throw Error(ErrorCode::PreconditionViolated,
                "witness does not reproduce the reported ratio");
  }
  nlohmann::json j{
      {"rule", rule},
      {"k", e.committee_size()},
      {"committee", committee_json(s)},
      {"objective", objective_name(obj)},
      {"mode", exact ? "exact" : "sample"},
      {"ratio", scalar_json(r.ratio)},
      {"witness_ratio", scalar_json(check.ratio)},
      {"patterns", r.patterns},
      {"programs", r.programs},
  };
  if (bound) {
    j["bound"] = surd_json(*bound);
    j["pass"] = compare(r.ratio, *bound) <= 0;
  }
  if (!witness_path.empty()) j["witness"] = witness_path;
  return j;
}

}  // namespace polarline
