#include "pdd/gridset.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pdd {

GridSet::GridSet(int r, long long N) : r_(r), N_(N) {
    if (r != 1 && r != 2) throw std::invalid_argument("GridSet: r must be 1 or 2");
    if (N < 1) throw std::invalid_argument("GridSet: N must be >= 1");
    std::size_t cells = static_cast<std::size_t>(N);
    if (r == 2) cells *= static_cast<std::size_t>(N);
    bits_.assign(cells, 0);
}

double GridSet::density() const {
    return bits_.empty() ? 0.0 : static_cast<double>(count_) / static_cast<double>(bits_.size());
}

std::size_t GridSet::index(long long x) const {
    if (r_ != 1) throw std::invalid_argument("GridSet: 1-d access on r=2 set");
    if (x < 1 || x > N_) throw std::out_of_range("GridSet: x outside [N]");
    return static_cast<std::size_t>(x - 1);
}

std::size_t GridSet::index(long long x, long long y) const {
    if (r_ != 2) throw std::invalid_argument("GridSet: 2-d access on r=1 set");
    if (x < 1 || x > N_ || y < 1 || y > N_) throw std::out_of_range("GridSet: point outside [N]^2");
    return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(N_) +
           static_cast<std::size_t>(y - 1);
}

bool GridSet::contains(long long x) const { return bits_[index(x)] != 0; }
bool GridSet::contains(long long x, long long y) const { return bits_[index(x, y)] != 0; }

void GridSet::insert(long long x) {
    auto i = index(x);
    if (!bits_[i]) { bits_[i] = 1; ++count_; }
}

void GridSet::insert(long long x, long long y) {
    auto i = index(x, y);
    if (!bits_[i]) { bits_[i] = 1; ++count_; }
}

std::vector<std::vector<long long>> GridSet::members() const {
    std::vector<std::vector<long long>> out;
    out.reserve(count_);
    if (r_ == 1) {
        for (long long x = 1; x <= N_; ++x)
            if (bits_[static_cast<std::size_t>(x - 1)]) out.push_back({x});
    } else {
        for (long long x = 1; x <= N_; ++x)
            for (long long y = 1; y <= N_; ++y)
                if (bits_[static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(N_) +
                          static_cast<std::size_t>(y - 1)])
                    out.push_back({x, y});
    }
    return out;
}

void save_grid_set(std::ostream& os, const GridSet& g) {
    os << "pdd-set v1\n";
    os << "r=" << g.r() << " N=" << g.N() << " kind=gridset\n";
    for (const auto& m : g.members()) {
        os << m[0];
        if (m.size() > 1) os << " " << m[1];
        os << "\n";
    }
}

void save_free_set(std::ostream& os, const FreeSet& f) {
    os << "pdd-set v1\n";
    os << "r=1 N=" << f.L << " kind=freeset\n";
    for (long long v : f.elements) os << v << "\n";
}

void save_set_file(const std::string& path, const GridSet& g) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    save_grid_set(os, g);
}

void save_set_file(const std::string& path, const FreeSet& f) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    save_free_set(os, f);
}

LoadedSet load_set(std::istream& is) {
    std::string magic;
    std::getline(is, magic);
    if (magic != "pdd-set v1") throw std::runtime_error("not a pdd-set v1 file");
    std::string header;
    std::getline(is, header);
    int r = 0;
    long long N = 0;
    char kindbuf[16] = {0};
    if (std::sscanf(header.c_str(), "r=%d N=%lld kind=%15s", &r, &N, kindbuf) != 3)
        throw std::runtime_error("bad pdd-set header: " + header);
    std::string kind = kindbuf;

    if (kind == "gridset") {
        GridSet g(r, N);
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            std::istringstream ls(line);
            long long x, y;
            if (r == 1) {
                ls >> x;
                g.insert(x);
            } else {
                ls >> x >> y;
                g.insert(x, y);
            }
        }
        return g;
    }
    if (kind == "freeset") {
        FreeSet f;
        f.L = N;
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            f.elements.push_back(std::stoll(line));
        }
        return f;
    }
    throw std::runtime_error("unknown pdd-set kind: " + kind);
}

LoadedSet load_set_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read " + path);
    return load_set(is);
}

} // namespace pdd
