// Bit-parallel factor tables. Row i of a subterm is a mask over j: bit j is
// set iff the factor i..j belongs to the subterm's interpretation.

#ifndef KAVC_FACTOR_KERNEL_HPP
#define KAVC_FACTOR_KERNEL_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "kavc/eval.hpp"

namespace kavc::detail {

using Row = std::uint64_t;

// Bits i..n.
inline Row upper_mask(std::size_t i, std::size_t n) {
  const Row all = n >= 63 ? ~Row{0} : (Row{1} << (n + 1)) - 1;
  return all & ~((Row{1} << i) - 1);
}

class FactorKernel {
 public:
  FactorKernel(const CompiledTerm& term, std::size_t n)
      : term_(&term), n_(n), table_(term.size() * (n + 1), 0) {}

  std::size_t stride() const noexcept { return n_ + 1; }

  // leaves[slot * stride() + i] is row i of the slot's variable.
  void evaluate(const Row* leaves) {
    const std::size_t s = stride();
    for (Handle h = 0; h < term_->size(); ++h) {
      const auto& node = term_->node(h);
      Row* out = &table_[h * s];
      switch (node.kind) {
        case TermKind::var:
          for (std::size_t i = 0; i < s; ++i) out[i] = leaves[node.slot * s + i];
          break;
        case TermKind::cvar:
          for (std::size_t i = 0; i < s; ++i) {
            out[i] = ~leaves[node.slot * s + i] & upper_mask(i, n_);
          }
          break;
        case TermKind::one:
          for (std::size_t i = 0; i < s; ++i) out[i] = Row{1} << i;
          break;
        case TermKind::zero:
          for (std::size_t i = 0; i < s; ++i) out[i] = 0;
          break;
        case TermKind::unite: {
          const Row* a = &table_[node.left * s];
          const Row* b = &table_[node.right * s];
          for (std::size_t i = 0; i < s; ++i) out[i] = a[i] | b[i];
          break;
        }
        case TermKind::concat: {
          const Row* a = &table_[node.left * s];
          const Row* b = &table_[node.right * s];
          for (std::size_t i = 0; i < s; ++i) {
            Row acc = 0;
            for (Row mids = a[i]; mids != 0; mids &= mids - 1) {
              acc |= b[std::countr_zero(mids)];
            }
            out[i] = acc;
          }
          break;
        }
        case TermKind::star: {
          const Row* a = &table_[node.left * s];
          for (std::size_t i = s; i-- > 0;) {
            Row acc = Row{1} << i;
            const Row beyond = ~(((Row{1} << i) << 1) - 1);
            for (Row mids = a[i] & beyond; mids != 0; mids &= mids - 1) {
              acc |= out[std::countr_zero(mids)];
            }
            out[i] = acc;
          }
          break;
        }
      }
    }
  }

  Row row(Handle h, std::size_t i) const { return table_[h * stride() + i]; }
  bool at(Handle h, std::size_t i, std::size_t j) const { return (row(h, i) >> j) & 1U; }

  std::vector<Row> release() && { return std::move(table_); }

 private:
  const CompiledTerm* term_;
  std::size_t n_;
  std::vector<Row> table_;
};

}  // namespace kavc::detail

#endif  // KAVC_FACTOR_KERNEL_HPP
