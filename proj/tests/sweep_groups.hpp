#pragma once

#include <array>
#include <numeric>
#include <set>
#include <string>
#include <vector>

// Coprime Gorenstein cyclic 1/r(a,b,c) with r <= 15, one per weight set up
// to order, plus three extra cyclic groups.
inline std::vector<std::string> sweep_groups() {
  std::set<std::array<int, 3>> seen;
  std::vector<std::string> out;
  for (int r = 2; r <= 15; ++r)
    for (int a = 1; a < r; ++a)
      for (int b = a; b < r; ++b) {
        int c = (3 * r - a - b) % r;
        if (c < b || c == 0) continue;
        if (std::gcd(a, r) != 1 || std::gcd(b, r) != 1 || std::gcd(c, r) != 1) continue;
        if (!seen.insert({r, a, b}).second) continue;
        out.push_back("1/" + std::to_string(r) + "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ")");
      }
  for (const char* s : {"1/3(1,1,1)", "1/7(1,2,4)", "1/11(1,2,8)"}) out.push_back(s);
  return out;
}
