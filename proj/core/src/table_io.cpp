#include "greens/table_io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace greens {

namespace {

struct Line {
  std::size_t number;  // 1-based position in the file
  std::string text;
};

std::vector<Line> nonblank_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      const auto last = line.find_last_not_of(" \t\r");
      out.push_back({number, std::string(line.substr(first, last - first + 1))});
    }
    if (nl == std::string_view::npos) {
      break;
    }
    pos = nl + 1;
  }
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

std::uint64_t parse_number(const std::string& tok, std::size_t line) {
  if (tok.empty() ||
      !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line, "expected a number, got \"" + tok + "\"");
  }
  try {
    return std::stoull(tok);
  } catch (const std::out_of_range&) {
    throw ParseError(line, "number \"" + tok + "\" is out of range");
  }
}

}  // namespace

FiniteSemigroup parse_table_file(std::string_view text) {
  const std::vector<Line> lines = nonblank_lines(text);
  if (lines.empty()) {
    throw ParseError(1, "empty table file");
  }
  const auto head = tokens(lines[0].text);
  if (head.size() != 1) {
    throw ParseError(lines[0].number, "first line must be the element count");
  }
  const std::uint64_t n = parse_number(head[0], lines[0].number);
  if (n == 0) {
    throw ParseError(lines[0].number, "element count must be positive");
  }
  if (lines.size() < n + 1) {
    throw ParseError(lines.back().number, "expected " + std::to_string(n) +
                                              " table rows");
  }
  std::vector<std::vector<element_index>> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    const Line& line = lines[1 + r];
    const auto toks = tokens(line.text);
    if (toks.size() != n) {
      throw ParseError(line.number, "row has " + std::to_string(toks.size()) +
                                        " entries, expected " +
                                        std::to_string(n));
    }
    std::vector<element_index> row;
    row.reserve(n);
    for (const auto& tok : toks) {
      row.push_back(static_cast<element_index>(parse_number(tok, line.number)));
    }
    rows.push_back(std::move(row));
  }
  std::optional<std::vector<std::string>> labels;
  std::size_t next = 1 + n;
  if (next < lines.size()) {
    auto toks = tokens(lines[next].text);
    if (toks.empty() || toks[0] != "labels:") {
      throw ParseError(lines[next].number, "unexpected content after table");
    }
    toks.erase(toks.begin());
    if (toks.size() != n) {
      throw ParseError(lines[next].number,
                       "expected " + std::to_string(n) + " labels");
    }
    labels = std::move(toks);
    ++next;
  }
  if (next < lines.size()) {
    throw ParseError(lines[next].number, "unexpected content after table");
  }
  return validate_table(rows, std::move(labels));
}

std::string emit_table_file(const FiniteSemigroup& S) {
  std::ostringstream os;
  os << S.size() << '\n';
  for (element_index x = 0; x < S.size(); ++x) {
    for (element_index y = 0; y < S.size(); ++y) {
      os << (y ? " " : "") << S.at(x, y);
    }
    os << '\n';
  }
  if (S.labels()) {
    os << "labels:";
    for (const auto& l : *S.labels()) {
      os << ' ' << l;
    }
    os << '\n';
  }
  return os.str();
}

GeneratedSemigroup parse_generators_file_full(std::string_view text) {
  const std::vector<Line> lines = nonblank_lines(text);
  if (lines.empty()) {
    throw ParseError(1, "empty generator file");
  }
  std::vector<ConcreteElement> gens;
  for (const Line& line : lines) {
    auto toks = tokens(line.text);
    if (toks.size() < 2) {
      throw ParseError(line.number, "expected \"<kind> <m>: <payload>\"");
    }
    const std::string kind = toks[0];
    std::string mtok = toks[1];
    if (mtok.empty() || mtok.back() != ':') {
      throw ParseError(line.number, "expected ':' after the degree");
    }
    mtok.pop_back();
    const std::uint64_t m = parse_number(mtok, line.number);
    if (m == 0) {
      throw ParseError(line.number, "degree must be positive");
    }
    const std::vector<std::string> payload(toks.begin() + 2, toks.end());

    if (kind == "t" || kind == "p") {
      if (payload.size() != m) {
        throw ParseError(line.number, "expected " + std::to_string(m) +
                                          " images, got " +
                                          std::to_string(payload.size()));
      }
      std::vector<std::int32_t> images;
      images.reserve(m);
      for (const auto& tok : payload) {
        if (tok == "-") {
          if (kind == "t") {
            throw ParseError(line.number, "total map with undefined point");
          }
          images.push_back(-1);
          continue;
        }
        const std::uint64_t v = parse_number(tok, line.number);
        if (v < 1 || v > m) {
          throw ParseError(line.number,
                           "image " + tok + " outside 1.." + std::to_string(m));
        }
        images.push_back(static_cast<std::int32_t>(v - 1));
      }
      try {
        if (kind == "t") {
          gens.emplace_back(Transformation{std::move(images)});
        } else {
          gens.emplace_back(PartialInjection{std::move(images)});
        }
      } catch (const SemigroupError& e) {
        throw ParseError(line.number, e.what());
      }
    } else if (kind == "bm") {
      BooleanMatrix mat{m, {}};
      mat.bits.reserve(m * m);
      std::string joined;
      for (const auto& p : payload) {
        joined += p;
      }
      std::vector<std::string> rows;
      std::size_t pos = 0;
      while (pos <= joined.size()) {
        const std::size_t semi = joined.find(';', pos);
        rows.push_back(joined.substr(
            pos, semi == std::string::npos ? std::string::npos : semi - pos));
        if (semi == std::string::npos) {
          break;
        }
        pos = semi + 1;
      }
      if (rows.size() != m) {
        throw ParseError(line.number, "expected " + std::to_string(m) +
                                          " matrix rows");
      }
      for (const auto& row : rows) {
        if (row.size() != m) {
          throw ParseError(line.number, "matrix row \"" + row + "\" must have " +
                                            std::to_string(m) + " bits");
        }
        for (char c : row) {
          if (c != '0' && c != '1') {
            throw ParseError(line.number, "matrix entries must be 0 or 1");
          }
          mat.bits.push_back(c == '1');
        }
      }
      gens.emplace_back(std::move(mat));
    } else {
      throw ParseError(line.number, "unknown generator kind \"" + kind + "\"");
    }
  }
  return generate_from_maps(gens);
}

FiniteSemigroup parse_generators_file(std::string_view text) {
  return parse_generators_file_full(text).semigroup;
}

SemigroupFileKind sniff_file_kind(std::string_view text) {
  const std::vector<Line> lines = nonblank_lines(text);
  if (lines.empty()) {
    throw ParseError(1, "empty file");
  }
  const auto toks = tokens(lines[0].text);
  const std::string& head = toks[0];
  if (head == "t" || head == "p" || head == "bm") {
    return SemigroupFileKind::generators;
  }
  if (std::all_of(head.begin(), head.end(),
                  [](char c) { return c >= '0' && c <= '9'; })) {
    return SemigroupFileKind::table;
  }
  throw ParseError(lines[0].number,
                   "cannot tell whether this is a table or generator file");
}

FiniteSemigroup parse_semigroup_file(std::string_view text) {
  switch (sniff_file_kind(text)) {
    case SemigroupFileKind::table:
      return parse_table_file(text);
    case SemigroupFileKind::generators:
      return parse_generators_file(text);
  }
  throw ParseError(1, "unreachable");
}

namespace {

std::string cell_text(const FiniteSemigroup& S, const EggboxCell& cell) {
  std::string out = cell.is_group ? "*" : "";
  for (std::size_t i = 0; i < cell.elements.size(); ++i) {
    if (i) {
      out += ' ';
    }
    out += S.label(cell.elements[i]);
  }
  return out;
}

}  // namespace

std::string emit_eggbox(const FiniteSemigroup& S, const GreenStructure& G,
                        EggboxFormat format) {
  std::ostringstream os;
  if (format == EggboxFormat::text) {
    for (element_index d = 0; d < G.d_count; ++d) {
      const EggboxDiagram E = eggbox(S, G, d);
      std::size_t size = 0;
      for (const auto& row : E.cells) {
        for (const auto& cell : row) {
          size += cell.elements.size();
        }
      }
      if (d) {
        os << '\n';
      }
      os << 'D' << d << " (size " << size << "): " << E.cells.size() << 'x'
         << E.cells[0].size() << '\n';
      for (const auto& row : E.cells) {
        os << ' ';
        for (const auto& cell : row) {
          os << " [" << cell_text(S, cell) << ']';
        }
        os << '\n';
      }
    }
    return os.str();
  }

  os << "digraph eggbox {\n";
  os << "  node [shape=box fontname=\"monospace\"];\n";
  for (element_index d = 0; d < G.d_count; ++d) {
    const EggboxDiagram E = eggbox(S, G, d);
    os << "  subgraph cluster_d" << d << " {\n";
    os << "    label=\"D" << d << "\";\n";
    auto node = [&](std::size_t r, std::size_t c) {
      std::ostringstream id;
      id << "d" << d << "_r" << r << "_c" << c;
      return id.str();
    };
    for (std::size_t r = 0; r < E.cells.size(); ++r) {
      for (std::size_t c = 0; c < E.cells[r].size(); ++c) {
        os << "    " << node(r, c) << " [label=\""
           << cell_text(S, E.cells[r][c]) << "\"];\n";
      }
    }
    for (std::size_t r = 0; r < E.cells.size(); ++r) {
      os << "    { rank=same;";
      for (std::size_t c = 0; c < E.cells[r].size(); ++c) {
        os << ' ' << node(r, c) << ';';
      }
      os << " }\n";
    }
    for (std::size_t r = 0; r + 1 < E.cells.size(); ++r) {
      for (std::size_t c = 0; c < E.cells[r].size(); ++c) {
        os << "    " << node(r, c) << " -> " << node(r + 1, c)
           << " [style=invis];\n";
      }
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace greens
