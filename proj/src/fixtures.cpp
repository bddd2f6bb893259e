#include "gentle/fixtures.hpp"

#include <map>

#include "gentle/cm_construct.hpp"
#include "gentle/errors.hpp"

namespace gentle::fixtures {

namespace {

const std::map<std::string, std::string>& table() {
  static const std::map<std::string, std::string> t = {
      {"C3",
       "vertex 1 2 3\n"
       "arrow a: 1 -> 2\n"
       "arrow b: 2 -> 3\n"
       "arrow c: 3 -> 1\n"
       "rel b a\n"
       "rel c b\n"
       "rel a c\n"},
      {"HEX",
       "vertex 1 [a] 2 [b] 3 [c]\n"
       "arrow a+: 1 -> [a]\n"
       "arrow a-: [a] -> 2\n"
       "arrow b+: 2 -> [b]\n"
       "arrow b-: [b] -> 3\n"
       "arrow c+: 3 -> [c]\n"
       "arrow c-: [c] -> 1\n"
       "rel b+ a-\n"
       "rel c+ b-\n"
       "rel a+ c-\n"},
      {"TWOCYC",
       "vertex 1 2\n"
       "arrow a: 1 -> 2\n"
       "arrow b: 2 -> 1\n"
       "rel a b\n"
       "rel b a\n"},
      {"LOOP",
       "vertex 1\n"
       "arrow a: 1 -> 1\n"
       "rel a a\n"},
      {"A2",
       "vertex 1 2\n"
       "arrow a: 1 -> 2\n"},
      {"KRON",
       "vertex 1 2\n"
       "arrow a: 1 -> 2\n"
       "arrow b: 1 -> 2\n"},
      {"A4",
       "vertex 1 2 3 4\n"
       "arrow a: 1 -> 2\n"
       "arrow b: 2 -> 3\n"
       "arrow c: 3 -> 4\n"},
  };
  return t;
}

}  // namespace

std::string text(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw DomainError("unknown fixture '" + name + "'");
  return it->second;
}

Presentation by_name(const std::string& name) { return parse_presentation(text(name)); }

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : table()) out.push_back(k);
  return out;
}

Presentation c3() { return by_name("C3"); }
Presentation hex() { return by_name("HEX"); }
Presentation twocyc() { return by_name("TWOCYC"); }
Presentation loop() { return by_name("LOOP"); }
Presentation a2() { return by_name("A2"); }
Presentation kron() { return by_name("KRON"); }
Presentation a4() { return by_name("A4"); }

Presentation linear(std::size_t n, unsigned orientation) {
  Quiver q;
  for (std::size_t v = 1; v <= n; ++v) q.add_vertex(std::to_string(v));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const bool flip = (orientation >> k) & 1u;
    q.add_arrow("a" + std::to_string(k + 1), flip ? k + 1 : k, flip ? k : k + 1);
  }
  return Presentation(std::move(q), {});
}

namespace {

const char* kTriangle =
    "vertex x y z\n"
    "arrow p: x -> y\n"
    "arrow q: y -> z\n"
    "arrow r: z -> x\n"
    "rel q p\n"
    "rel r q\n"
    "rel p r\n";

Presentation triangle_plus(const std::string& extra_vertices, const std::string& extra_arrows) {
  std::string t = kTriangle;
  if (!extra_vertices.empty()) t += "vertex " + extra_vertices + "\n";
  t += extra_arrows;
  return cm_auslander(parse_presentation(t));
}

Quiver quiver_of(const std::string& arrows) {
  return parse_presentation("vertex TL BL K BR TR\n" + arrows).quiver();
}

}  // namespace

SplitCase split_triangle_s3() {
  // x <- v1 <- v2 -> v3 hanging off the triangle; cut v2 -> v1
  return SplitCase{
      triangle_plus("v1 v2 v3",
                    "arrow e1: v1 -> x\narrow e2: v2 -> v1\narrow e3: v2 -> v3\n"),
      triangle_plus("v1", "arrow e1: v1 -> x\n"),
      parse_presentation("vertex v2 v3\narrow e3: v2 -> v3\n"),
      triangle_plus("", ""),
      parse_presentation("vertex v3\n"),
  };
}

SplitCase split_triangle_s4() {
  // x <- 1 <- 2 <- 3 -> 4; cut 3 -> 4
  return SplitCase{
      triangle_plus("1 2 3 4",
                    "arrow e1: 1 -> x\narrow e2: 2 -> 1\narrow e3: 3 -> 2\narrow e4: 3 -> 4\n"),
      triangle_plus("1 2 3", "arrow e1: 1 -> x\narrow e2: 2 -> 1\narrow e3: 3 -> 2\n"),
      parse_presentation("vertex 4\n"),
      triangle_plus("1 2", "arrow e1: 1 -> x\narrow e2: 2 -> 1\n"),
      Presentation{},
  };
}

std::vector<NeighborhoodRow> mutation_table() {
  std::vector<NeighborhoodRow> rows;
  // unused vertices of the five are dropped so the quivers stay connected
  auto q = [](const std::string& vertices, const std::string& arrows) {
    return parse_presentation("vertex " + vertices + "\n" + arrows).quiver();
  };
  rows.push_back({"1", q("TL K", "arrow u: TL -> K\n"), q("TL K", "arrow u: K -> TL\n")});
  rows.push_back({"2a", q("TL BL K", "arrow u: TL -> K\narrow v: BL -> K\n"),
                  q("TL BL K", "arrow u: K -> TL\narrow v: K -> BL\n")});
  rows.push_back({"2b", q("TL BL K", "arrow u: TL -> K\narrow v: K -> BL\n"),
                  q("TL BL K", "arrow u: TL -> K\narrow v: K -> BL\narrow w: BL -> TL\n")});
  rows.push_back({"3",
                  q("TL BL K BR",
                    "arrow u: BL -> BR\narrow v: BR -> K\narrow w: K -> BL\narrow x: TL -> K\n"),
                  q("TL BL K BR",
                    "arrow u: BL -> K\narrow v: K -> TL\narrow w: TL -> BL\narrow x: K -> BR\n")});
  rows.push_back({"4",
                  quiver_of("arrow u: BL -> BR\narrow v: K -> BL\narrow w: BR -> K\n"
                            "arrow x: TL -> K\narrow y: K -> TR\narrow z: TR -> TL\n"),
                  quiver_of("arrow u: BL -> K\narrow v: K -> TL\narrow w: TL -> BL\n"
                            "arrow x: K -> BR\narrow y: BR -> TR\narrow z: TR -> K\n")});
  return rows;
}

}  // namespace gentle::fixtures
