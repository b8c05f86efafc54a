#include "nilp/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nilp {

ChainState init_minimal(const StartSequence& seq, std::uint64_t seed) {
    const int n = seq.n();
    ChainState st{seq, {}, {}, {}, {}, 0, 0, std::mt19937_64(seed)};
    st.occupied.assign(seq.last() + 1, std::vector<char>(n + 1, 0));
    st.corner_offsets.resize(n + 2);
    long total = 0;
    for (int i = 0; i <= n; ++i) {
        st.corner_offsets[i] = total;
        total += std::max(seq.a[i] + i - 1, 0L);
    }
    st.corner_offsets[n + 1] = total;
    st.config.steps.resize(n + 1);
    st.verts.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        long x = seq.a[i], y = 0;
        st.occupied[x][y] = 1;
        st.verts[i].emplace_back(x, y);
        while (x != 0 || y != i) {
            if (x > 0 && !st.occupied[x - 1][y]) {
                --x;
                st.config.steps[i].push_back(Step::West);
            } else {
                ++y;
                st.config.steps[i].push_back(Step::North);
            }
            st.occupied[x][y] = 1;
            st.verts[i].emplace_back(x, y);
        }
    }
    return st;
}

bool flip_step(ChainState& state) {
    // uniform over (path, corner position) pairs; word lengths never change
    const auto& offsets = state.corner_offsets;
    const long total = offsets.back();
    ++state.proposals;
    if (total == 0)
        return false;
    const long pick = std::uniform_int_distribution<long>(0, total - 1)(state.rng);
    const int i = static_cast<int>(
        std::upper_bound(offsets.begin(), offsets.end(), pick) - offsets.begin() - 1);
    const long j = pick - offsets[i];
    auto& word = state.config.steps[i];
    if (word[j] == word[j + 1])
        return false;
    const auto [x, y] = state.verts[i][j];      // vertex before step j
    const auto [mx, my] = state.verts[i][j + 1];  // current corner vertex
    long nx = x, ny = y;  // flipped corner vertex
    (word[j + 1] == Step::West) ? --nx : ++ny;
    if (state.occupied[nx][ny])
        return false;
    state.occupied[mx][my] = 0;
    state.occupied[nx][ny] = 1;
    state.verts[i][j + 1] = {nx, ny};
    std::swap(word[j], word[j + 1]);
    ++state.accepted;
    return true;
}

std::vector<PathConfiguration> sample_ensemble(const StartSequence& seq, std::size_t n_samples,
                                               std::uint64_t burn_in, std::uint64_t thin,
                                               std::uint64_t seed) {
    ChainState st = init_minimal(seq, seed);
    for (std::uint64_t k = 0; k < burn_in; ++k)
        flip_step(st);
    std::vector<PathConfiguration> out;
    out.reserve(n_samples);
    std::uint64_t since_check = 0;
    while (out.size() < n_samples) {
        for (std::uint64_t k = 0; k < thin; ++k)
            flip_step(st);
        if (++since_check % 1000 == 0 && !st.valid())
            throw std::logic_error("sampler state corrupted");
        out.push_back(st.config);
    }
    return out;
}

std::vector<PathConfiguration> sample_ensemble(const StartSequence& seq, std::size_t n_samples,
                                               std::uint64_t seed) {
    const std::uint64_t unit = static_cast<std::uint64_t>(seq.n()) * seq.last();
    return sample_ensemble(seq, n_samples, 20 * unit, std::max<std::uint64_t>(unit, 1), seed);
}

double gamma_p(double a, double x) {
    if (x < 0 || a <= 0)
        throw std::invalid_argument("gamma_p needs x >= 0, a > 0");
    if (x == 0)
        return 0;
    const double gln = std::lgamma(a);
    if (x < a + 1) {
        // series expansion
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-15)
                break;
        }
        return sum * std::exp(-x + a * std::log(x) - gln);
    }
    // continued fraction for Q, then P = 1 - Q
    double b = x + 1 - a, c = 1e308, d = 1 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2;
        d = an * d + b;
        if (std::abs(d) < 1e-300)
            d = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300)
            c = 1e-300;
        d = 1 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1) < 1e-15)
            break;
    }
    return 1 - std::exp(-x + a * std::log(x) - gln) * h;
}

double chi_square_pvalue(double stat, int dof) { return 1 - gamma_p(0.5 * dof, 0.5 * stat); }

double uniformity_pvalue(const StartSequence& seq,
                         const std::vector<PathConfiguration>& samples) {
    const auto states = brute_force_enumerate(seq);
    std::map<std::string, long> counts;
    for (const auto& st : states)
        counts[st.key()] = 0;
    for (const auto& s : samples) {
        auto it = counts.find(s.key());
        if (it == counts.end())
            throw std::logic_error("sampled configuration outside the state space");
        ++it->second;
    }
    const double expected = static_cast<double>(samples.size()) / states.size();
    double stat = 0;
    for (const auto& [k, c] : counts)
        stat += (c - expected) * (c - expected) / expected;
    return chi_square_pvalue(stat, static_cast<int>(states.size()) - 1);
}

namespace {

// upper envelope Y(X) of the generic portions, linearly interpolated
std::vector<std::pair<double, double>> envelope(const std::vector<ArcticPortion>& portions) {
    std::vector<std::pair<double, double>> pts;
    for (const ArcticPortion& p : portions)
        for (const CurveSample& s : p.samples)
            pts.emplace_back(s.X, s.Y);
    std::sort(pts.begin(), pts.end());
    return pts;
}

double envelope_y(const std::vector<std::pair<double, double>>& env, double X) {
    if (env.empty())
        return 0;
    if (X <= env.front().first)
        return env.front().second;
    if (X >= env.back().first)
        return env.back().second;
    auto it = std::lower_bound(env.begin(), env.end(), std::make_pair(X, -1e300));
    const auto [x1, y1] = *it;
    const auto [x0, y0] = *(it - 1);
    return x1 == x0 ? std::max(y0, y1) : y0 + (y1 - y0) * (X - x0) / (x1 - x0);
}

}  // namespace

double overlay_inside_fraction(const StartSequence& seq,
                               const std::vector<PathConfiguration>& samples,
                               const std::vector<ArcticPortion>& portions, double margin) {
    const auto env = envelope(portions);
    // the curve meets Y = 1 at the tangency abscissa X1; left of it the paths
    // fill the whole strip up to Y = 1 (frozen-west region), so the predicted
    // region is {Y <= env(X)} union {X <= X1}
    double x_top = 0, y_top = -1;
    for (const auto& [x, y] : env)
        if (y > y_top + 1e-12) {
            y_top = y;
            x_top = x;
        }
    const int n = seq.n();
    long inside = 0, total = 0;
    for (const auto& cfg : samples)
        for (const auto& [vx, vy] : cfg.vertices(seq, n)) {
            const double X = static_cast<double>(vx) / n;
            const double Y = static_cast<double>(vy) / n;
            ++total;
            if (Y <= envelope_y(env, X) + margin || X <= x_top + margin)
                ++inside;
        }
    return total == 0 ? 1.0 : static_cast<double>(inside) / total;
}

std::string samples_to_text(const std::vector<PathConfiguration>& samples) {
    std::ostringstream out;
    for (std::size_t i = 0; i < samples.size(); ++i)
        out << "# sample " << i << '\n' << samples[i].to_text();
    return out.str();
}

std::string overlay_svg(const StartSequence& seq, const std::vector<PathConfiguration>& samples,
                        const std::vector<ArcticPortion>& portions) {
    const int n = seq.n();
    const double a1 = static_cast<double>(seq.last()) / n;
    std::ostringstream pts;
    pts.precision(6);
    const double W = 800.0, H = 800.0 / a1, px = W / a1;
    for (const auto& cfg : samples)
        for (const auto& [vx, vy] : cfg.vertices(seq, n))
            pts << "<circle cx=\"" << vx * px / n << "\" cy=\"" << H - vy * px / n
                << "\" r=\"1\" fill=\"#00000030\"/>\n";
    std::string base = portions_to_svg(portions, a1);
    const auto at = base.rfind("</svg>");
    return base.substr(0, at) + pts.str() + "</svg>\n";
}

}  // namespace nilp
