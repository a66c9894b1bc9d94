#include "posetops/fixtures.hpp"

namespace posetops {
namespace fixtures {

namespace {

// Complement by name: 0 <-> 1, x <-> x'.
ComplementedPoset with_primed_complements(FinitePoset p) {
  std::vector<int> comp(p.size());
  for (int i = 0; i < p.size(); ++i) {
    const std::string& nm = p.name(i);
    if (nm == "0")
      comp[i] = p.index_of("1");
    else if (nm == "1")
      comp[i] = p.index_of("0");
    else if (nm.back() == '\'')
      comp[i] = p.index_of(nm.substr(0, nm.size() - 1));
    else
      comp[i] = p.index_of(nm + "'");
  }
  return ComplementedPoset(BoundedPoset(std::move(p)), comp);
}

}  // namespace

FinitePoset figure1() {
  return FinitePoset::from_covers({"0", "a", "b", "c", "d", "e"},
                                  {{"0", "a"},
                                   {"0", "b"},
                                   {"a", "c"},
                                   {"a", "d"},
                                   {"b", "c"},
                                   {"b", "d"},
                                   {"b", "e"}});
}

ComplementedPoset figure2() {
  FinitePoset p = FinitePoset::from_covers(
      {"0", "a", "b", "c", "d", "a'", "b'", "c'", "d'", "1"},
      {{"0", "a"},  {"0", "b"},  {"0", "c"},  {"0", "d"},  {"a", "b'"}, {"a", "c'"},
       {"a", "d'"}, {"b", "a'"}, {"b", "d'"}, {"c", "a'"}, {"c", "d'"}, {"d", "a'"},
       {"d", "b'"}, {"d", "c'"}, {"a'", "1"}, {"b'", "1"}, {"c'", "1"}, {"d'", "1"}});
  return with_primed_complements(std::move(p));
}

ComplementedPoset figure3() {
  FinitePoset p = FinitePoset::from_covers(
      {"0", "a", "b", "c", "d", "a'", "b'", "c'", "d'", "1"},
      {{"0", "a"},  {"0", "b"},  {"0", "c"},  {"0", "d"},  {"a", "b'"}, {"a", "c'"},
       {"a", "d'"}, {"b", "a'"}, {"b", "c'"}, {"b", "d'"}, {"c", "a'"}, {"c", "b'"},
       {"c", "d'"}, {"d", "a'"}, {"d", "b'"}, {"d", "c'"}, {"a'", "1"}, {"b'", "1"},
       {"c'", "1"}, {"d'", "1"}});
  return with_primed_complements(std::move(p));
}

ComplementedPoset figure4() {
  FinitePoset p = FinitePoset::from_covers(
      {"0", "a", "b", "c", "d", "e", "a'", "b'", "c'", "d'", "e'", "1"},
      {{"0", "a"},  {"0", "b"},  {"0", "c"},  {"0", "d"},  {"a", "e"},  {"b", "e"},
       {"c", "e'"}, {"d", "e'"}, {"a", "b'"}, {"b", "a'"}, {"c", "d'"}, {"d", "c'"},
       {"e", "c'"}, {"e", "d'"}, {"e'", "a'"}, {"e'", "b'"}, {"a'", "1"}, {"b'", "1"},
       {"c'", "1"}, {"d'", "1"}});
  return with_primed_complements(std::move(p));
}

}  // namespace fixtures
}  // namespace posetops
