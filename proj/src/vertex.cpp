#include "spingraph/vertex.hpp"

#include <cctype>
#include <stdexcept>

namespace spingraph {

std::string to_label(const Vertex& v) {
  std::string out;
  if (v.conjugated) out += '~';
  out += 'P';
  if (v.cls > 0) out += std::to_string(v.cls);
  return out;
}

Vertex parse_vertex(std::string_view label, int genus) {
  std::string_view rest = label;
  Vertex v;
  if (!rest.empty() && rest.front() == '~') {
    v.conjugated = true;
    rest.remove_prefix(1);
  }
  if (rest.empty() || rest.front() != 'P')
    throw std::invalid_argument("bad vertex label '" + std::string(label) + "'");
  rest.remove_prefix(1);
  if (rest.empty()) {
    v.cls = 0;
    return v;
  }
  int cls = 0;
  for (char c : rest) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad vertex label '" + std::string(label) + "'");
    cls = cls * 10 + (c - '0');
    if (cls > genus)
      throw std::invalid_argument("vertex class out of range in '" + std::string(label) +
                                  "' (genus " + std::to_string(genus) + ")");
  }
  if (cls == 0)
    throw std::invalid_argument("bad vertex label '" + std::string(label) + "'");
  v.cls = cls;
  return v;
}

}  // namespace spingraph
