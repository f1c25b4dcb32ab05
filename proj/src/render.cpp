#include "agbcyl/render.hpp"

#include <algorithm>
#include <sstream>

namespace agbcyl {

std::string render_cyl(const CylPart& p) {
  int width = 1;
  for (const auto& row : p.rows)
    for (int v : row) width = std::max<int>(width, static_cast<int>(std::to_string(v).size()));
  std::ostringstream os;
  auto cell = [&](const std::string& s) {
    os << std::string(width + 1 - s.size(), ' ') << s;
  };
  for (int copy = 1; copy >= 0; --copy) {
    for (int i = 1; i <= p.r; ++i) {
      const int start = p.mu_at(i) + copy * p.d;
      for (int c = 0; c < start; ++c) cell("");
      for (int v : p.rows[i - 1]) cell(std::to_string(v));
      cell(".");
      os << '\n';
    }
  }
  return os.str();
}

std::string render_path(const DecoratedPath& h) {
  const auto& hs = h.path.heights;
  int last = static_cast<int>(hs.size()) - 1;
  if (!h.deaks.empty()) last = std::max(last, h.deaks.rbegin()->first);
  last += 1;
  const int k = h.path.k;
  const int w = 2 * last + 1;
  std::vector<std::string> grid(k + 1, std::string(w, ' '));
  for (int y = 0; y <= k; ++y)
    for (int x = 0; x < w; x += 2) grid[y][x] = '.';
  for (int i = 0; i <= last; ++i) {
    const int y = h.path.at(i);
    auto it = h.deaks.find(i);
    char mark = 'o';
    if (it != h.deaks.end()) mark = it->second < 10 ? static_cast<char>('0' + it->second) : '+';
    grid[y][2 * i] = mark;
    if (i < last) {
      const int y2 = h.path.at(i + 1);
      const char link = y2 > y ? '/' : y2 < y ? '\\' : '-';
      grid[std::min(y, y2)][2 * i + 1] = link;
    }
  }
  std::ostringstream os;
  for (int y = k; y >= 0; --y) os << y << " |" << grid[y] << '\n';
  const auto st = path_stats(h);
  os << "np=" << st.np << " wt=" << st.wt << '\n';
  return os.str();
}

std::string render_abacus(const CylPart& p) {
  const AbacusState s = cyl_to_abacus(p);
  const int depth = static_cast<int>(s.yokel.size()) + 2;
  const auto beads = bead_columns(p, depth);
  int lo = beads[0][depth - 1], hi = beads[0][0];
  for (const auto& b : beads) {
    lo = std::min(lo, b[depth - 1]);
    hi = std::max(hi, b[0]);
  }
  hi += 2;
  std::ostringstream os;
  for (int t = 0; t < p.r; ++t) {
    os << "string " << t + 1 << ": ";
    for (int c = lo; c <= hi; ++c) {
      const bool bead = c <= beads[t][0] &&
                        (std::find(beads[t].begin(), beads[t].end(), c) != beads[t].end() ||
                         c < beads[t][depth - 1]);
      os << (bead ? "●" : "○");
    }
    os << '\n';
  }
  for (std::size_t j = 0; j < s.yokel.size(); ++j) {
    os << "yoke " << j + 1 << ": " << to_string(s.yokel[j]) << " columns";
    for (int t = 0; t < p.r; ++t) os << ' ' << beads[t][j];
    os << ", vacancies to its left " << s.formation[j] << '\n';
  }
  os << "tail " << to_string(s.tail) << '\n';
  return os.str();
}

}  // namespace agbcyl
