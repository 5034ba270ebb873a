// Embedded classification fixtures and their CSV/checksum plumbing.
#include <cstdint>
#include <fstream>
#include <sstream>

#include "triform/classify.hpp"

namespace triform {

const std::vector<TernaryEntry>& ternary_regular_table() {
  static const std::vector<TernaryEntry> table = {
      {{1, 1, 1}, true},   {{1, 1, 2}, true},   {{1, 1, 3}, true},
      {{1, 1, 4}, true},   {{1, 1, 5}, true},   {{1, 1, 6}, true},
      {{1, 1, 9}, false},  {{1, 1, 12}, true},  {{1, 1, 18}, false},
      {{1, 1, 21}, true},  {{1, 2, 2}, true},   {{1, 2, 3}, true},
      {{1, 2, 4}, true},   {{1, 2, 5}, true},   {{1, 2, 10}, true},
      {{1, 3, 3}, false},  {{1, 3, 4}, true},   {{1, 3, 6}, false},
      {{1, 3, 9}, false},  {{1, 3, 10}, true},  {{1, 3, 12}, false},
      {{1, 3, 18}, false}, {{1, 3, 27}, false}, {{1, 3, 30}, false},
      {{1, 4, 6}, true},   {{1, 4, 9}, false},  {{1, 5, 5}, false},
      {{1, 5, 10}, false}, {{1, 5, 25}, false}, {{1, 6, 6}, false},
      {{1, 6, 9}, false},  {{1, 6, 27}, false}, {{1, 9, 9}, false},
      {{1, 9, 12}, false}, {{1, 9, 18}, false}, {{1, 9, 21}, false},
      {{1, 21, 21}, false},{{2, 2, 3}, true},   {{2, 3, 3}, false},
      {{2, 3, 9}, false},  {{2, 3, 12}, false}, {{2, 3, 18}, false},
      {{2, 5, 10}, false}, {{2, 5, 15}, false}, {{3, 3, 4}, false},
      {{3, 3, 7}, false},  {{3, 7, 7}, false},  {{3, 7, 63}, false},
      {{5, 6, 15}, false},
  };
  return table;
}

const std::vector<QuaternaryFamily>& quaternary_family_table() {
  static const std::vector<QuaternaryFamily> table = {
      {{1, 1, 3},
       {{1, 3, 1, 0}, {2, 3, 1, 0}, {4, 3, 2, 0}, {5, 3, 2, 0}, {7, 3, 2, -2}, {8, 3, 2, -2}},
       {}},
      {{1, 1, 6}, {{1, 3, 1, 1}, {2, 3, 2, 0}, {4, 3, 2, 0}, {5, 3, 2, 0}}, {}},
      {{1, 2, 5}, {{1, 5, 2, 0}, {2, 5, 2, 0}, {3, 5, 2, 0}, {4, 5, 2, 0}}, {}},
      {{1, 3, 3},
       {{1, 3, 1, 0}, {2, 3, 1, 0}, {4, 3, 2, -1}, {5, 3, 2, -1}, {7, 3, 2, -1}, {8, 3, 2, -1}},
       {}},
      {{1, 3, 4}, {{1, 3, 2, 0}, {2, 3, 2, 0}}, {}},
      {{1, 3, 9},
       {{1, 3, 1, 1}, {2, 3, 1, 1}, {4, 3, 2, 0}, {5, 3, 2, 0}, {7, 3, 2, 0}, {8, 3, 2, 0}},
       {}},
      {{1, 3, 12}, {{1, 3, 2, 1}, {2, 3, 2, 1}}, {}},
      {{1, 3, 27},
       {{1, 3, 1, 2}, {2, 3, 1, 2}, {4, 3, 2, 1}, {5, 3, 2, 1}, {7, 3, 2, 1}, {8, 3, 2, 1}},
       {}},
      {{1, 5, 10}, {{1, 5, 2, 1}, {2, 5, 2, -1}, {3, 5, 2, -1}, {4, 5, 2, -1}}, {}},
      {{1, 6, 6}, {{1, 3, 2, 1}}, {}},
      {{1, 6, 9}, {{1, 3, 1, 1}, {2, 3, 2, 0}, {4, 3, 2, 0}, {5, 3, 2, 0}}, {}},
      {{1, 6, 18}, {}, {18, 27, 36}},
      {{1, 7, 7}, {}, {7, 14, 21, 28, 35}},
      {{1, 7, 14}, {}, {14, 21, 28}},
      {{2, 2, 3}, {{1, 3, 2, 0}}, {}},
      {{2, 3, 3}, {{1, 3, 1, 0}, {2, 3, 2, -1}, {4, 3, 2, -1}, {5, 3, 2, -1}}, {}},
      {{2, 3, 6}, {}, {6, 9, 12}},
      {{2, 3, 18}, {{1, 3, 2, 2}}, {}},
      {{2, 3, 27}, {}, {27, 54}},
      {{3, 5, 15}, {}, {15, 30}},
  };
  return table;
}

const std::vector<DropRecord>& drop_table() {
  static const std::vector<DropRecord> table = {
      {5, {1, 1, 3, 18}, 3, {1, 3, 3, 6}, {1, 3, 6}, 1, false},
      {6, {1, 2, 5, 25}, 5, {1, 5, 5, 10}, {1, 5, 5}, 1, false},
      {7, {1, 3, 3, 3}, 3, {1, 1, 1, 3}, {1, 1, 1}, 1, false},
      {8, {1, 3, 3, 12}, 3, {1, 1, 3, 4}, {1, 1, 4}, 1, false},
      {9, {1, 3, 3, 15}, 3, {1, 1, 3, 5}, {1, 1, 5}, 1, false},
      {10, {1, 3, 4, 18}, 3, {1, 3, 6, 12}, {1, 3, 6}, 1, false},
      {11, {1, 3, 27, 54}, 3, {1, 3, 9, 18}, {1, 3, 18}, 1, false},
      {12, {1, 5, 10, 10}, 5, {1, 2, 2, 5}, {1, 2, 2}, 1, false},
      {13, {1, 5, 10, 15}, 5, {1, 2, 3, 5}, {1, 2, 3}, 1, false},
      {14, {1, 5, 10, 20}, 5, {1, 2, 4, 5}, {1, 2, 4}, 1, false},
      {15, {1, 7, 7, 7}, 7, {1, 1, 1, 7}, {1, 1, 1}, 1, false},
      {16, {1, 7, 7, 14}, 7, {1, 1, 2, 7}, {1, 1, 2}, 1, false},
      {17, {1, 7, 7, 28}, 7, {1, 1, 4, 7}, {1, 1, 4}, 1, false},
      {18, {1, 7, 7, 35}, 7, {1, 1, 5, 7}, {1, 1, 5}, 1, false},
      {19, {1, 7, 14, 14}, 7, {1, 2, 2, 7}, {1, 2, 2}, 1, false},
      {20, {1, 7, 14, 21}, 7, {1, 2, 3, 7}, {1, 2, 3}, 1, false},
      {21, {1, 7, 14, 28}, 7, {1, 2, 4, 7}, {1, 2, 4}, 1, false},
      {22, {2, 2, 3, 9}, 3, {1, 3, 6, 6}, {1, 3, 6}, 1, false},
      {23, {2, 3, 3, 3}, 3, {1, 1, 1, 6}, {1, 1, 1}, 1, false},
      {24, {2, 3, 3, 6}, 3, {1, 1, 2, 6}, {1, 1, 2}, 1, false},
      {25, {2, 3, 3, 12}, 3, {1, 1, 4, 6}, {1, 1, 4}, 1, false},
      {26, {2, 3, 3, 15}, 3, {1, 1, 5, 6}, {1, 1, 5}, 1, false},
      {27, {2, 3, 6, 6}, 3, {1, 2, 2, 6}, {1, 2, 2}, 1, false},
      {28, {2, 3, 6, 9}, 3, {1, 2, 3, 6}, {1, 2, 3}, 1, false},
      {29, {2, 3, 6, 12}, 3, {1, 2, 4, 6}, {1, 2, 4}, 1, false},
      {30, {3, 5, 15, 15}, 3, {1, 5, 5, 15}, {1, 5, 5}, 1, true},
      {31, {3, 5, 15, 30}, 5, {1, 3, 6, 15}, {1, 3, 6}, 1, true},
  };
  return table;
}

const std::vector<std::pair<Form, StreamCounts>>& stream_table() {
  static const std::vector<std::pair<Form, StreamCounts>> table = {
      {{1, 1, 3, 3}, {1, 1, 0}},  {{1, 1, 3, 6}, {2, 2, 0}},
      {{1, 1, 3, 7}, {1, 1, 1}},  {{1, 1, 3, 8}, {1, 1, 0}},
      {{1, 1, 3, 18}, {1, 1, 0}}, {{1, 2, 5, 25}, {1, 0, 0}},
      {{1, 3, 3, 3}, {1, 1, 0}},  {{1, 3, 3, 12}, {2, 1, 0}},
      {{1, 3, 3, 15}, {1, 1, 1}}, {{1, 3, 4, 18}, {1, 0, 0}},
      {{1, 3, 27, 54}, {0, 0, 0}},{{1, 5, 10, 10}, {1, 0, 0}},
      {{1, 5, 10, 15}, {1, 0, 1}},{{1, 5, 10, 20}, {1, 0, 0}},
      {{1, 7, 7, 7}, {0, 0, 0}},  {{1, 7, 7, 14}, {0, 0, 0}},
      {{1, 7, 7, 28}, {0, 0, 0}}, {{1, 7, 7, 35}, {0, 0, 0}},
      {{1, 7, 14, 14}, {0, 0, 0}},{{1, 7, 14, 21}, {0, 0, 0}},
      {{1, 7, 14, 28}, {0, 0, 0}},{{2, 2, 3, 9}, {1, 1, 0}},
      {{2, 3, 3, 3}, {1, 1, 1}},  {{2, 3, 3, 6}, {1, 1, 1}},
      {{2, 3, 3, 12}, {1, 1, 0}}, {{2, 3, 3, 15}, {1, 1, 0}},
      {{2, 3, 6, 6}, {0, 0, 1}},  {{2, 3, 6, 9}, {0, 0, 1}},
      {{2, 3, 6, 12}, {0, 0, 1}},
  };
  return table;
}

const std::vector<std::pair<Form, std::string>>& ternary_prefix_table() {
  static const std::vector<std::pair<Form, std::string>> table = {
      {{1, 1, 1}, "3'"},   {{1, 1, 2}, "3'"},   {{1, 1, 3}, "1"},
      {{1, 1, 4}, "3'"},   {{1, 1, 5}, "3'"},   {{1, 1, 6}, "1"},
      {{1, 1, 9}, "0'"},   {{1, 1, 12}, "1'"},  {{1, 1, 18}, "0'"},
      {{1, 1, 21}, "2'"},  {{1, 2, 2}, "3'"},   {{1, 2, 3}, "3'"},
      {{1, 2, 4}, "3'"},   {{1, 2, 5}, "1"},    {{1, 2, 7}, "6'"},
      {{1, 2, 10}, "1'"},  {{1, 3, 3}, "1"},    {{1, 3, 4}, "1"},
      {{1, 3, 6}, "0'"},   {{1, 3, 9}, "1"},    {{1, 3, 10}, "2'"},
      {{1, 3, 12}, "1"},   {{1, 3, 18}, "0'"},  {{1, 3, 27}, "1"},
      {{1, 3, 30}, "2'"},  {{1, 4, 6}, "1'"},   {{1, 4, 9}, "0'"},
      {{1, 5, 5}, "0'"},   {{1, 5, 10}, "1"},   {{1, 5, 25}, "0'"},
      {{1, 6, 6}, "1"},    {{1, 6, 9}, "1"},    {{1, 6, 18}, "6"},
      {{1, 6, 27}, "0'"},  {{1, 7, 7}, "6"},    {{1, 7, 14}, "6"},
      {{1, 9, 9}, "0'"},   {{1, 9, 12}, "1'"},  {{1, 9, 18}, "0'"},
      {{1, 9, 21}, "2'"},  {{1, 15, 45}, "6'"}, {{1, 21, 21}, "2'"},
      {{2, 2, 3}, "1"},    {{2, 3, 3}, "1"},    {{2, 3, 6}, "6"},
      {{2, 3, 9}, "0'"},   {{2, 3, 12}, "1'"},  {{2, 3, 18}, "1"},
      {{2, 3, 27}, "6"},   {{2, 5, 10}, "1'"},  {{2, 5, 15}, "2'"},
      {{2, 15, 45}, "6'"}, {{3, 3, 3}, "4'"},   {{3, 3, 4}, "1'"},
      {{3, 3, 6}, "4'"},   {{3, 3, 7}, "2'"},   {{3, 3, 9}, "4'"},
      {{3, 3, 12}, "4'"},  {{3, 3, 15}, "4'"},  {{3, 5, 9}, "6'"},
      {{3, 5, 15}, "6"},   {{3, 6, 6}, "4'"},   {{3, 6, 9}, "4'"},
      {{3, 6, 12}, "4'"},  {{3, 6, 15}, "5'"},  {{3, 6, 21}, "6'"},
      {{3, 6, 30}, "5'"},  {{3, 7, 7}, "2'"},   {{3, 7, 63}, "2'"},
      {{3, 9, 10}, "6'"},  {{3, 15, 15}, "5'"}, {{3, 15, 30}, "5'"},
      {{3, 15, 75}, "5'"}, {{3, 21, 21}, "6'"}, {{3, 21, 42}, "6'"},
      {{5, 6, 15}, "2'"},  {{6, 15, 30}, "5'"},
  };
  return table;
}

namespace {

std::string csv_form(const Form& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(a[i]);
  }
  return s;
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::string fixture_csv(const std::string& name) {
  std::ostringstream out;
  if (name == "ternary") {
    out << "a1 a2 a3,stable\n";
    for (const auto& e : ternary_regular_table()) {
      out << csv_form(e.a) << ',' << (e.stable ? 1 : 0) << '\n';
    }
  } else if (name == "families") {
    out << "a1 a2 a3,terms,finite\n";
    for (const auto& f : quaternary_family_table()) {
      out << csv_form(f.base) << ',';
      for (std::size_t i = 0; i < f.terms.size(); ++i) {
        const auto& t = f.terms[i];
        if (i) out << ';';
        out << t.c << '*' << t.p << '^' << '(' << t.mul << "r"
            << (t.off >= 0 ? "+" : "") << t.off << ')';
      }
      out << ',';
      for (std::size_t i = 0; i < f.finite.size(); ++i) {
        if (i) out << ';';
        out << f.finite[i];
      }
      out << '\n';
    }
  } else if (name == "drops") {
    out << "index,top,p,image,bottom,height,dual\n";
    for (const auto& d : drop_table()) {
      out << d.index << ',' << csv_form(d.top) << ',' << d.p << ','
          << csv_form(d.image) << ',' << csv_form(d.bottom) << ',' << d.height
          << ',' << (d.dual_unstable ? 1 : 0) << '\n';
    }
  } else if (name == "streams") {
    out << "root,mainstreams,tributaries,sporadics\n";
    for (const auto& [root, c] : stream_table()) {
      out << csv_form(root) << ',' << c.mainstreams << ',' << c.tributaries
          << ',' << c.sporadics << '\n';
    }
  } else if (name == "prefixes") {
    out << "a1 a2 a3,type\n";
    for (const auto& [a, type] : ternary_prefix_table()) {
      out << csv_form(a) << ',' << type << '\n';
    }
  } else {
    throw ArithmeticError("unknown fixture: " + name);
  }
  return out.str();
}

std::uint64_t fixture_checksum(const std::string& name) {
  return fnv1a(fixture_csv(name));
}

std::vector<std::string> verify_fixture_dir(const std::string& dir) {
  std::vector<std::string> problems;
  const std::string names[] = {"ternary", "families", "drops", "streams", "prefixes"};

  std::ifstream manifest(dir + "/manifest.txt");
  if (!manifest) {
    problems.push_back("cannot open " + dir + "/manifest.txt");
    return problems;
  }
  std::vector<std::pair<std::string, std::string>> listed;
  std::string line;
  while (std::getline(manifest, line)) {
    if (line.empty()) continue;
    const auto sp = line.find(' ');
    if (sp == std::string::npos) {
      problems.push_back("malformed manifest line: " + line);
      continue;
    }
    listed.emplace_back(line.substr(sp + 1), line.substr(0, sp));
  }

  for (const auto& name : names) {
    std::ifstream f(dir + "/" + name + ".csv");
    if (!f) {
      problems.push_back("missing fixture file: " + name + ".csv");
      continue;
    }
    std::ostringstream content;
    content << f.rdbuf();
    if (content.str() != fixture_csv(name)) {
      problems.push_back("fixture file diverges from embedded data: " + name + ".csv");
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(content.str())));
    bool found = false;
    for (const auto& [fname, sum] : listed) {
      if (fname == name + ".csv") {
        found = true;
        if (sum != buf) {
          problems.push_back("checksum mismatch for " + name + ".csv");
        }
      }
    }
    if (!found) problems.push_back("manifest entry missing for " + name + ".csv");
  }
  return problems;
}

}  // namespace triform
