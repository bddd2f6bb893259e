#include <sstream>

#include "gentle/errors.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Quiver q;
  std::vector<Relation> relations;
  std::set<std::pair<std::size_t, std::size_t>> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = split_ws(line);
    const std::string& keyword = tokens.front();

    try {
      if (keyword == "vertex") {
        if (tokens.size() < 2) throw ParseError(line_no, "vertex needs at least one id");
        for (std::size_t i = 1; i < tokens.size(); ++i) q.add_vertex(tokens[i]);
      } else if (keyword == "arrow") {
        const std::string rest = trim(std::string_view(line).substr(keyword.size()));
        const auto colon = rest.find(':');
        if (colon == std::string::npos) throw ParseError(line_no, "expected 'arrow <id>: <src> -> <tgt>'");
        const std::string id = trim(std::string_view(rest).substr(0, colon));
        const std::string ends = trim(std::string_view(rest).substr(colon + 1));
        const auto arrow_pos = ends.find("->");
        if (id.empty() || arrow_pos == std::string::npos)
          throw ParseError(line_no, "expected 'arrow <id>: <src> -> <tgt>'");
        const std::string src = trim(std::string_view(ends).substr(0, arrow_pos));
        const std::string tgt = trim(std::string_view(ends).substr(arrow_pos + 2));
        if (src.empty() || tgt.empty() || split_ws(src).size() != 1 || split_ws(tgt).size() != 1)
          throw ParseError(line_no, "expected 'arrow <id>: <src> -> <tgt>'");
        if (!q.find_vertex(src)) throw ParseError(line_no, "unknown vertex '" + src + "'");
        if (!q.find_vertex(tgt)) throw ParseError(line_no, "unknown vertex '" + tgt + "'");
        q.add_arrow(id, src, tgt);
      } else if (keyword == "rel") {
        if (tokens.size() > 3)
          throw ParseError(line_no,
                           "only length-2 zero relations are supported (gentle presentations)");
        if (tokens.size() < 3) throw ParseError(line_no, "expected 'rel <beta> <alpha>'");
        const auto outer = q.find_arrow(tokens[1]);
        const auto inner = q.find_arrow(tokens[2]);
        if (!outer) throw ParseError(line_no, "unknown arrow '" + tokens[1] + "'");
        if (!inner) throw ParseError(line_no, "unknown arrow '" + tokens[2] + "'");
        if (q.arrow(*inner).target != q.arrow(*outer).source)
          throw ParseError(line_no, "relation '" + tokens[1] + " " + tokens[2] +
                                        "' is not composable: t(" + tokens[2] + ") != s(" +
                                        tokens[1] + ")");
        if (!seen.emplace(*outer, *inner).second)
          throw ParseError(line_no, "duplicate relation '" + tokens[1] + " " + tokens[2] + "'");
        relations.push_back(Relation{*outer, *inner});
      } else {
        throw ParseError(line_no, "unknown keyword '" + keyword + "'");
      }
    } catch (const DomainError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return Presentation(std::move(q), std::move(relations));
}

std::string serialize(const Presentation& p) {
  const Quiver& q = p.quiver();
  std::ostringstream out;
  if (q.vertex_count() != 0) {
    out << "vertex";
    for (const auto& v : q.vertex_names()) out << ' ' << v;
    out << '\n';
  }
  for (const auto& a : q.arrows())
    out << "arrow " << a.name << ": " << q.vertex_name(a.source) << " -> "
        << q.vertex_name(a.target) << '\n';
  for (const auto& r : p.relations())
    out << "rel " << q.arrow(r.outer).name << ' ' << q.arrow(r.inner).name << '\n';
  return out.str();
}

}  // namespace gentle
