#include "nilp/path_config.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace nilp {

std::vector<std::pair<long, long>> PathConfiguration::vertices(const StartSequence& seq,
                                                               int i) const {
    std::vector<std::pair<long, long>> v;
    long x = seq.a[i], y = 0;
    v.emplace_back(x, y);
    for (Step s : steps[i]) {
        if (s == Step::West)
            --x;
        else
            ++y;
        v.emplace_back(x, y);
    }
    return v;
}

std::string PathConfiguration::to_text() const {
    std::ostringstream out;
    for (const auto& word : steps) {
        bool first = true;
        std::size_t i = 0;
        while (i < word.size()) {
            std::size_t j = i;
            while (j < word.size() && word[j] == word[i])
                ++j;
            if (!first)
                out << ' ';
            out << (j - i) << (word[i] == Step::West ? 'W' : 'N');
            first = false;
            i = j;
        }
        if (word.empty())
            out << '-';
        out << '\n';
    }
    return out.str();
}

std::string PathConfiguration::key() const {
    std::string k;
    for (const auto& word : steps) {
        for (Step s : word)
            k += (s == Step::West ? 'W' : 'N');
        k += '|';
    }
    return k;
}

bool is_valid_configuration(const StartSequence& seq, const PathConfiguration& cfg) {
    const int n = seq.n();
    if (static_cast<int>(cfg.steps.size()) != n + 1)
        return false;
    std::set<std::pair<long, long>> occupied;
    for (int i = 0; i <= n; ++i) {
        long west = 0, north = 0;
        for (Step s : cfg.steps[i])
            (s == Step::West ? west : north)++;
        if (west != seq.a[i] || north != i)
            return false;
        for (const auto& v : cfg.vertices(seq, i))
            if (!occupied.insert(v).second)
                return false;
    }
    return true;
}

bool within_brute_force_guard(const StartSequence& seq) {
    return seq.last() <= 12 && seq.n() <= 5;
}

namespace {

struct Enumerator {
    const StartSequence& seq;
    std::vector<std::vector<bool>> occupied;  // [x][y]
    PathConfiguration current;
    std::vector<PathConfiguration>* out;
    long count = 0;

    explicit Enumerator(const StartSequence& s, std::vector<PathConfiguration>* sink)
        : seq(s), occupied(s.last() + 1, std::vector<bool>(s.n() + 1, false)), out(sink) {
        current.steps.resize(s.n() + 1);
    }

    void extend_path(int i, long x, long y) {
        if (x == 0 && y == i) {
            next_path(i + 1);
            return;
        }
        if (x > 0 && !occupied[x - 1][y]) {
            occupied[x - 1][y] = true;
            current.steps[i].push_back(Step::West);
            extend_path(i, x - 1, y);
            current.steps[i].pop_back();
            occupied[x - 1][y] = false;
        }
        if (y < i && !occupied[x][y + 1]) {
            occupied[x][y + 1] = true;
            current.steps[i].push_back(Step::North);
            extend_path(i, x, y + 1);
            current.steps[i].pop_back();
            occupied[x][y + 1] = false;
        }
    }

    void next_path(int i) {
        if (i > seq.n()) {
            ++count;
            if (out)
                out->push_back(current);
            return;
        }
        const long x0 = seq.a[i];
        if (occupied[x0][0])
            return;
        occupied[x0][0] = true;
        extend_path(i, x0, 0);
        occupied[x0][0] = false;
    }
};

}  // namespace

std::vector<PathConfiguration> brute_force_enumerate(const StartSequence& seq) {
    if (!within_brute_force_guard(seq))
        throw std::invalid_argument("sequence exceeds the brute-force size guard");
    std::vector<PathConfiguration> all;
    Enumerator e(seq, &all);
    e.next_path(0);
    return all;
}

long brute_force_count(const StartSequence& seq) {
    if (!within_brute_force_guard(seq))
        throw std::invalid_argument("sequence exceeds the brute-force size guard");
    Enumerator e(seq, nullptr);
    e.next_path(0);
    return e.count;
}

}  // namespace nilp
