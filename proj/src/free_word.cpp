#include "braidmono/free_word.hpp"

#include <cstdlib>

#include "braidmono/errors.hpp"

namespace braidmono {

FreeWord::FreeWord(int rank) : rank_(rank) {
    if (rank < 0)
        throw ValidationError("free-word rank must be nonnegative");
}

FreeWord::FreeWord(int rank, const std::vector<int>& letters) : FreeWord(rank) {
    letters_.reserve(letters.size());
    for (int v : letters)
        push_reduce(v);
}

FreeWord FreeWord::generator(int rank, int i) {
    return FreeWord(rank, {i});
}

void FreeWord::push_reduce(int letter) {
    if (letter == 0 || std::abs(letter) > rank_)
        throw ValidationError("free-word letter out of range 1..rank");
    if (!letters_.empty() && letters_.back() == -letter)
        letters_.pop_back();
    else
        letters_.push_back(letter);
}

void FreeWord::append_reduce(const FreeWord& w) {
    if (w.rank_ != rank_)
        throw ValidationError("free-word rank mismatch");
    for (int v : w.letters_)
        push_reduce(v);
}

FreeWord FreeWord::inverse() const {
    FreeWord r(rank_);
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        r.letters_.push_back(-*it);
    return r;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    FreeWord r = a;
    r.append_reduce(b);
    return r;
}

std::string FreeWord::str() const {
    if (letters_.empty())
        return "1";
    std::string s;
    for (std::size_t t = 0; t < letters_.size();) {
        std::size_t u = t;
        while (u < letters_.size() && letters_[u] == letters_[t])
            ++u;
        if (!s.empty())
            s += ' ';
        s += 'u' + std::to_string(std::abs(letters_[t]));
        long long e = static_cast<long long>(u - t) * (letters_[t] > 0 ? 1 : -1);
        if (e != 1)
            s += '^' + std::to_string(e);
        t = u;
    }
    return s;
}

} // namespace braidmono
