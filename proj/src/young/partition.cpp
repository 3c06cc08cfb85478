#include <galilei/young/partition.hpp>

#include <algorithm>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace galilei::young {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::column(int k) {
    if (k < 0) throw std::invalid_argument("negative column length");
    return Partition(std::vector<int>(static_cast<size_t>(k), 1));
}

Partition Partition::parse(const std::string& text) {
    std::string body;
    for (char ch : text)
        if (ch != ' ' && ch != '(' && ch != ')') body += ch;
    if (body.empty() || body == "∅") return Partition();
    static const std::regex item(R"((\d+)(\^(\d+))?)");
    std::vector<int> parts;
    size_t start = 0;
    while (start <= body.size()) {
        size_t comma = body.find(',', start);
        if (comma == std::string::npos) comma = body.size();
        std::smatch m;
        const std::string token = body.substr(start, comma - start);
        if (!std::regex_match(token, m, item)) throw std::invalid_argument("not a partition: " + text);
        const int part = std::stoi(m[1].str());
        const int times = m[3].matched ? std::stoi(m[3].str()) : 1;
        parts.insert(parts.end(), static_cast<size_t>(times), part);
        start = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::count(int part) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), part)); }

bool Partition::dominates(const Partition& other) const {
    if (size() != other.size()) throw std::invalid_argument("dominance between partitions of different sizes");
    int a = 0, b = 0;
    const size_t len = std::max(parts_.size(), other.parts_.size());
    for (size_t i = 0; i < len; ++i) {
        a += i < parts_.size() ? parts_[i] : 0;
        b += i < other.parts_.size() ? other.parts_[i] : 0;
        if (a < b) return false;
    }
    return true;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "∅";
    std::string out = "(";
    for (size_t i = 0; i < parts_.size();) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (i > 0) out += ",";
        out += std::to_string(parts_[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out + ")";
}

std::vector<Partition> partitions_bounded(int n, int max_part) {
    if (n < 0 || max_part < 0) throw std::invalid_argument("partitions_bounded: negative argument");
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int left, int cap) -> void {
        if (left == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            parts.push_back(p);
            self(self, left - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, max_part);
    return out;
}

long long count_partitions_bounded(int n, int max_part) {
    std::vector<long long> ways(static_cast<size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int p = 1; p <= max_part; ++p)
        for (int s = p; s <= n; ++s) ways[static_cast<size_t>(s)] += ways[static_cast<size_t>(s - p)];
    return ways[static_cast<size_t>(n)];
}

}  // namespace galilei::young
