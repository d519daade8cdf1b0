#include "greens/concrete_element.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace greens {

namespace {

void validate_payload(const ConcreteElement::Payload& p) {
  if (const auto* t = std::get_if<Transformation>(&p)) {
    const auto m = static_cast<std::int32_t>(t->images.size());
    if (m == 0) {
      throw SemigroupError("transformation on an empty base set");
    }
    for (std::int32_t v : t->images) {
      if (v < 0 || v >= m) {
        throw SemigroupError("transformation image out of range");
      }
    }
  } else if (const auto* pi = std::get_if<PartialInjection>(&p)) {
    const auto m = static_cast<std::int32_t>(pi->images.size());
    if (m == 0) {
      throw SemigroupError("partial injection on an empty base set");
    }
    std::vector<bool> hit(static_cast<std::size_t>(m), false);
    for (std::int32_t v : pi->images) {
      if (v < -1 || v >= m) {
        throw SemigroupError("partial injection image out of range");
      }
      if (v >= 0) {
        if (hit[static_cast<std::size_t>(v)]) {
          throw SemigroupError("partial injection is not injective");
        }
        hit[static_cast<std::size_t>(v)] = true;
      }
    }
  } else if (const auto* b = std::get_if<BooleanMatrix>(&p)) {
    if (b->dim == 0 || b->bits.size() != b->dim * b->dim) {
      throw SemigroupError("boolean matrix has inconsistent dimensions");
    }
    for (std::uint8_t v : b->bits) {
      if (v > 1) {
        throw SemigroupError("boolean matrix entry must be 0 or 1");
      }
    }
  } else if (const auto* r = std::get_if<ReesTriple>(&p)) {
    if (!r->context) {
      throw SemigroupError("Rees triple without a context");
    }
    const auto& ctx = *r->context;
    if (ctx.columns() == 0 || ctx.rows() == 0) {
      throw SemigroupError("Rees sandwich matrix is empty");
    }
    for (const auto& col : ctx.sandwich) {
      if (col.size() != ctx.rows()) {
        throw SemigroupError("Rees sandwich matrix is ragged");
      }
      for (element_index g : col) {
        if (g >= ctx.group.size()) {
          throw SemigroupError("Rees sandwich entry outside the group");
        }
      }
    }
    if (r->row >= ctx.rows() || r->column >= ctx.columns() ||
        r->group_element >= ctx.group.size()) {
      throw SemigroupError("Rees triple index outside the sandwich matrix");
    }
  }
}

}  // namespace

ConcreteElement::ConcreteElement(Payload payload)
    : payload_(std::move(payload)) {
  validate_payload(payload_);
}

std::size_t ConcreteElement::degree() const {
  return std::visit(
      [](const auto& v) -> std::size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Transformation> ||
                      std::is_same_v<T, PartialInjection>) {
          return v.images.size();
        } else if constexpr (std::is_same_v<T, BooleanMatrix>) {
          return v.dim;
        } else {
          return 0;
        }
      },
      payload_);
}

std::string ConcreteElement::to_string() const {
  std::ostringstream os;
  if (const auto* t = std::get_if<Transformation>(&payload_)) {
    os << '[';
    for (std::size_t i = 0; i < t->images.size(); ++i) {
      os << (i ? " " : "") << t->images[i] + 1;
    }
    os << ']';
  } else if (const auto* p = std::get_if<PartialInjection>(&payload_)) {
    os << '[';
    for (std::size_t i = 0; i < p->images.size(); ++i) {
      if (i) {
        os << ' ';
      }
      if (p->images[i] < 0) {
        os << '-';
      } else {
        os << p->images[i] + 1;
      }
    }
    os << ']';
  } else if (const auto* b = std::get_if<BooleanMatrix>(&payload_)) {
    os << '[';
    for (std::size_t r = 0; r < b->dim; ++r) {
      if (r) {
        os << ';';
      }
      for (std::size_t c = 0; c < b->dim; ++c) {
        os << int(b->bits[r * b->dim + c]);
      }
    }
    os << ']';
  } else {
    const auto& r = std::get<ReesTriple>(payload_);
    os << '(' << r.row << ',' << r.context->group.label(r.group_element) << ','
       << r.column << ')';
  }
  return os.str();
}

bool ConcreteElement::operator==(const ConcreteElement& other) const {
  return (*this <=> other) == std::strong_ordering::equal;
}

std::strong_ordering ConcreteElement::operator<=>(
    const ConcreteElement& other) const {
  if (auto c = payload_.index() <=> other.payload_.index(); c != 0) {
    return c;
  }
  if (const auto* t = std::get_if<Transformation>(&payload_)) {
    const auto& u = std::get<Transformation>(other.payload_);
    return t->images <=> u.images;
  }
  if (const auto* p = std::get_if<PartialInjection>(&payload_)) {
    const auto& q = std::get<PartialInjection>(other.payload_);
    return p->images <=> q.images;
  }
  if (const auto* b = std::get_if<BooleanMatrix>(&payload_)) {
    const auto& c = std::get<BooleanMatrix>(other.payload_);
    if (auto d = b->dim <=> c.dim; d != 0) {
      return d;
    }
    return b->bits <=> c.bits;
  }
  const auto& r = std::get<ReesTriple>(payload_);
  const auto& s = std::get<ReesTriple>(other.payload_);
  if (auto c = r.row <=> s.row; c != 0) {
    return c;
  }
  if (auto c = r.group_element <=> s.group_element; c != 0) {
    return c;
  }
  return r.column <=> s.column;
}

ConcreteElement compose(const ConcreteElement& a, const ConcreteElement& b) {
  if (a.payload().index() != b.payload().index()) {
    throw MixedVariantsError();
  }
  if (const auto* t = std::get_if<Transformation>(&a.payload())) {
    const auto& u = std::get<Transformation>(b.payload());
    if (t->images.size() != u.images.size()) {
      throw DimensionMismatchError("transformations act on different sets");
    }
    Transformation out;
    out.images.reserve(t->images.size());
    for (std::int32_t x : t->images) {
      out.images.push_back(u.images[static_cast<std::size_t>(x)]);
    }
    return ConcreteElement(std::move(out));
  }
  if (const auto* p = std::get_if<PartialInjection>(&a.payload())) {
    const auto& q = std::get<PartialInjection>(b.payload());
    if (p->images.size() != q.images.size()) {
      throw DimensionMismatchError("partial injections act on different sets");
    }
    PartialInjection out;
    out.images.reserve(p->images.size());
    for (std::int32_t x : p->images) {
      out.images.push_back(x < 0 ? -1 : q.images[static_cast<std::size_t>(x)]);
    }
    return ConcreteElement(std::move(out));
  }
  if (const auto* m = std::get_if<BooleanMatrix>(&a.payload())) {
    const auto& k = std::get<BooleanMatrix>(b.payload());
    if (m->dim != k.dim) {
      throw DimensionMismatchError("boolean matrices of different dimensions");
    }
    const std::size_t d = m->dim;
    BooleanMatrix out{d, std::vector<std::uint8_t>(d * d, 0)};
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t l = 0; l < d; ++l) {
        if (m->bits[i * d + l]) {
          for (std::size_t j = 0; j < d; ++j) {
            out.bits[i * d + j] |= k.bits[l * d + j];
          }
        }
      }
    }
    return ConcreteElement(std::move(out));
  }
  const auto& r = std::get<ReesTriple>(a.payload());
  const auto& s = std::get<ReesTriple>(b.payload());
  if (r.context != s.context) {
    throw DimensionMismatchError("Rees triples over different contexts");
  }
  const auto& ctx = *r.context;
  const element_index mid = ctx.sandwich[r.column][s.row];
  ReesTriple out;
  out.row = r.row;
  out.group_element =
      ctx.group.at(ctx.group.at(r.group_element, mid), s.group_element);
  out.column = s.column;
  out.context = r.context;
  return ConcreteElement(std::move(out));
}

GeneratedSemigroup generate_from_maps(
    const std::vector<ConcreteElement>& generators, std::size_t size_limit) {
  if (generators.empty()) {
    throw SemigroupError("generator list must be nonempty");
  }
  for (const auto& g : generators) {
    if (g.payload().index() != generators[0].payload().index()) {
      throw MixedVariantsError();
    }
    // compose() re-checks, but failing early gives a cleaner message
    compose(generators[0], g);
  }

  std::vector<ConcreteElement> elements;
  std::map<ConcreteElement, element_index> index_of;
  std::vector<element_index> gen_indices;
  for (const auto& g : generators) {
    if (index_of.emplace(g, static_cast<element_index>(elements.size()))
            .second) {
      gen_indices.push_back(static_cast<element_index>(elements.size()));
      elements.push_back(g);
    }
  }

  std::vector<element_index> frontier(gen_indices);
  while (!frontier.empty()) {
    // Collect the round's new elements sorted by payload, then index them.
    std::set<ConcreteElement> batch;
    for (element_index x : frontier) {
      for (element_index g : gen_indices) {
        ConcreteElement p = compose(elements[x], elements[g]);
        if (!index_of.contains(p)) {
          batch.insert(std::move(p));
        }
      }
    }
    frontier.clear();
    for (const auto& p : batch) {
      const auto idx = static_cast<element_index>(elements.size());
      if (elements.size() >= size_limit) {
        throw SizeLimitError(size_limit);
      }
      index_of.emplace(p, idx);
      elements.push_back(p);
      frontier.push_back(idx);
    }
  }

  const std::size_t n = elements.size();
  std::vector<element_index> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      table[x * n + y] = index_of.at(compose(elements[x], elements[y]));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elements) {
    labels.push_back(e.to_string());
  }
  GeneratedSemigroup out;
  out.semigroup = FiniteSemigroup::from_table_unchecked(n, std::move(table),
                                                        std::move(labels));
  out.elements = std::move(elements);
  return out;
}

}  // namespace greens
