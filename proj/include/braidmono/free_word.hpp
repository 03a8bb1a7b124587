#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace braidmono {

// Reduced word in the free group on generators 1..rank.
// Letters are signed indices; the letter sequence never contains an adjacent
// pair (v, -v). Reduction is maintained by every mutating operation.
class FreeWord {
  public:
    FreeWord() = default;
    explicit FreeWord(int rank);
    FreeWord(int rank, const std::vector<int>& letters);

    static FreeWord generator(int rank, int i);

    int rank() const { return rank_; }
    const std::vector<int>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    // Appends one letter, cancelling against the current last letter.
    void push_reduce(int letter);
    void append_reduce(const FreeWord& w);

    FreeWord inverse() const;

    bool operator==(const FreeWord&) const = default;

    std::string str() const;

  private:
    int rank_ = 0;
    std::vector<int> letters_;
};

FreeWord operator*(const FreeWord& a, const FreeWord& b);

} // namespace braidmono
