#include "combi/combi.h"

#include <exception>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "combi/character.hpp"
#include "combi/error.hpp"
#include "combi/plactic.hpp"
#include "combi/rs.hpp"
#include "combi/schur.hpp"

struct combi_partition {
  combi::Partition value;
};

struct combi_seq_list {
  std::vector<std::vector<int>> items;
};

struct combi_expansion {
  int degree = 0;
  std::vector<std::vector<int>> keys;
  std::vector<int64_t> coeffs;
};

struct combi_char_table {
  std::vector<std::vector<int>> labels;
  std::vector<std::vector<int64_t>> values;
};

namespace {

thread_local std::string last_error;

combi_status fail(combi_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating library exceptions into status codes.
template <typename Body>
combi_status guarded(Body&& body) {
  try {
    body();
    return COMBI_OK;
  } catch (const combi::InvalidArgument& e) {
    return fail(COMBI_ERR_INVALID_ARGUMENT, e.what());
  } catch (const combi::BoundExceeded& e) {
    return fail(COMBI_ERR_BOUND_EXCEEDED, e.what());
  } catch (const combi::Overflow& e) {
    return fail(COMBI_ERR_OVERFLOW, e.what());
  } catch (const std::bad_alloc&) {
    return fail(COMBI_ERR_BOUND_EXCEEDED, "out of memory");
  } catch (const std::exception& e) {
    return fail(COMBI_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(COMBI_ERR_INTERNAL, "unknown error");
  }
}

template <typename... Ptrs>
bool any_null(Ptrs... ptrs) {
  return ((ptrs == nullptr) || ...);
}

combi_status null_arg() { return fail(COMBI_ERR_INVALID_ARGUMENT, "null pointer argument"); }

combi::Word word_of(const int* w, size_t len) { return combi::Word(w, w + len); }

combi::Rows rows_of(const combi_seq_list* list) { return list->items; }

combi_seq_list* list_of(std::vector<std::vector<int>> items) { return new combi_seq_list{std::move(items)}; }

combi_expansion* expansion_of(const combi::Expansion& e) {
  auto* out = new combi_expansion;
  out->degree = e.degree();
  for (const auto& [key, c] : e.terms()) {
    out->keys.push_back(key.parts());
    out->coeffs.push_back(c);
  }
  return out;
}

}  // namespace

extern "C" {

const char* combi_version(void) { return "1.0.0"; }

const char* combi_last_error(void) { return last_error.c_str(); }

const char* combi_status_name(combi_status status) {
  switch (status) {
    case COMBI_OK: return "ok";
    case COMBI_ERR_INVALID_ARGUMENT: return "invalid argument";
    case COMBI_ERR_BOUND_EXCEEDED: return "bound exceeded";
    case COMBI_ERR_OVERFLOW: return "overflow";
    case COMBI_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

combi_status combi_partition_parse(const char* text, combi_partition** out) {
  if (any_null(text, out)) return null_arg();
  return guarded([&] { *out = new combi_partition{combi::Partition::parse(text)}; });
}

combi_status combi_partition_from_parts(const int* parts, size_t len, combi_partition** out) {
  if (out == nullptr || (parts == nullptr && len > 0)) return null_arg();
  return guarded([&] {
    std::vector<int> v(parts, parts + len);
    if (!combi::is_partition(v)) throw combi::InvalidArgument("not a partition");
    *out = new combi_partition{combi::Partition(std::move(v))};
  });
}

void combi_partition_free(combi_partition* p) { delete p; }

size_t combi_partition_length(const combi_partition* p) { return p ? p->value.length() : 0; }

const int* combi_partition_parts(const combi_partition* p) { return p ? p->value.parts().data() : nullptr; }

int combi_partition_size(const combi_partition* p) { return p ? p->value.size() : 0; }

combi_status combi_partitions_of(int n, combi_seq_list** out) {
  if (out == nullptr) return null_arg();
  return guarded([&] {
    std::vector<std::vector<int>> items;
    for (const auto& p : combi::partitions_of(n)) items.push_back(p.parts());
    *out = list_of(std::move(items));
  });
}

combi_status combi_count_syt(const combi_partition* p, int64_t* out) {
  if (any_null(p, out)) return null_arg();
  return guarded([&] { *out = combi::count_syt(p->value); });
}

combi_status combi_centralizer_order(const combi_partition* mu, int64_t* out) {
  if (any_null(mu, out)) return null_arg();
  return guarded([&] { *out = combi::centralizer_order(mu->value); });
}

combi_seq_list* combi_seq_list_new(void) { return new (std::nothrow) combi_seq_list; }

combi_status combi_seq_list_push(combi_seq_list* list, const int* data, size_t len) {
  if (list == nullptr || (data == nullptr && len > 0)) return null_arg();
  return guarded([&] { list->items.emplace_back(data, data + len); });
}

void combi_seq_list_free(combi_seq_list* list) { delete list; }

size_t combi_seq_list_count(const combi_seq_list* list) { return list ? list->items.size() : 0; }

const int* combi_seq_list_at(const combi_seq_list* list, size_t i, size_t* len) {
  if (list == nullptr || i >= list->items.size()) {
    if (len) *len = 0;
    return nullptr;
  }
  if (len) *len = list->items[i].size();
  return list->items[i].data();
}

combi_status combi_word_parse(const char* text, combi_seq_list** out) {
  if (any_null(text, out)) return null_arg();
  return guarded([&] { *out = list_of({combi::parse_word(text)}); });
}

combi_status combi_is_yamanouchi(const int* w, size_t len, int* out) {
  if (out == nullptr || (w == nullptr && len > 0)) return null_arg();
  return guarded([&] { *out = combi::is_yamanouchi(word_of(w, len)) ? 1 : 0; });
}

combi_status combi_yamanouchi_words(const combi_partition* mu, combi_seq_list** out) {
  if (any_null(mu, out)) return null_arg();
  return guarded([&] { *out = list_of(combi::enum_yameval(mu->value)); });
}

combi_status combi_standardize(const int* w, size_t len, combi_seq_list** out) {
  if (out == nullptr || (w == nullptr && len > 0)) return null_arg();
  return guarded([&] { *out = list_of({combi::standardize(word_of(w, len))}); });
}

combi_status combi_rs(const int* w, size_t len, combi_seq_list** p_rows, combi_seq_list** q_rows) {
  if (any_null(p_rows, q_rows) || (w == nullptr && len > 0)) return null_arg();
  return guarded([&] {
    auto pair = combi::rs(word_of(w, len));
    std::unique_ptr<combi_seq_list> p(list_of(pair.p.rows()));
    *q_rows = list_of(pair.q.rows());
    *p_rows = p.release();
  });
}

combi_status combi_rs_inverse(const combi_seq_list* p_rows, const combi_seq_list* q_rows, combi_seq_list** word) {
  if (any_null(p_rows, q_rows, word)) return null_arg();
  return guarded([&] { *word = list_of({combi::rs_inverse(rows_of(p_rows), rows_of(q_rows))}); });
}

combi_status combi_greene_row(const int* w, size_t len, int k, int* out) {
  if (out == nullptr || (w == nullptr && len > 0)) return null_arg();
  return guarded([&] { *out = combi::greene_row(word_of(w, len), k); });
}

combi_status combi_greene_col(const int* w, size_t len, int k, int* out) {
  if (out == nullptr || (w == nullptr && len > 0)) return null_arg();
  return guarded([&] { *out = combi::greene_col(word_of(w, len), k); });
}

combi_status combi_plactic_normal_form(const int* w, size_t len, combi_seq_list** out) {
  if (out == nullptr || (w == nullptr && len > 0)) return null_arg();
  return guarded([&] { *out = list_of({combi::plactic_normal_form(word_of(w, len))}); });
}

combi_status combi_plactic_equiv(const int* u, size_t ulen, const int* v, size_t vlen, int* out) {
  if (out == nullptr || (u == nullptr && ulen > 0) || (v == nullptr && vlen > 0)) return null_arg();
  return guarded([&] { *out = combi::plactic_equiv(word_of(u, ulen), word_of(v, vlen)) ? 1 : 0; });
}

combi_status combi_lr_coeff(const combi_partition* outer, const combi_partition* inner, const combi_partition* mu,
                            int64_t* out) {
  if (any_null(outer, inner, mu, out)) return null_arg();
  return guarded([&] { *out = combi::lr_coeff(outer->value, inner->value, mu->value); });
}

combi_status combi_lr_tableaux(const combi_partition* outer, const combi_partition* inner, const combi_partition* mu,
                               combi_seq_list** out) {
  if (any_null(outer, inner, mu, out)) return null_arg();
  return guarded([&] { *out = list_of(combi::lr_words(outer->value, inner->value, mu->value)); });
}

combi_status combi_kostka(const combi_partition* lambda, const combi_partition* mu, int64_t* out) {
  if (any_null(lambda, mu, out)) return null_arg();
  return guarded([&] { *out = combi::kostka(lambda->value, mu->value); });
}

combi_status combi_schur_to_monomial(const combi_partition* lambda, int num_vars, combi_expansion** out) {
  if (any_null(lambda, out)) return null_arg();
  return guarded([&] { *out = expansion_of(combi::schur_to_monomial(lambda->value, num_vars)); });
}

combi_status combi_schur_product(const combi_partition* lambda, const combi_partition* mu, unsigned threads,
                                 combi_expansion** out) {
  if (any_null(lambda, mu, out)) return null_arg();
  return guarded([&] { *out = expansion_of(combi::schur_product(lambda->value, mu->value, threads)); });
}

combi_status combi_pieri(const combi_partition* lambda, int k, int vertical, combi_expansion** out) {
  if (any_null(lambda, out)) return null_arg();
  return guarded([&] {
    *out = expansion_of(vertical ? combi::pieri_col(lambda->value, k) : combi::pieri_row(lambda->value, k));
  });
}

void combi_expansion_free(combi_expansion* e) { delete e; }

int combi_expansion_degree(const combi_expansion* e) { return e ? e->degree : 0; }

size_t combi_expansion_count(const combi_expansion* e) { return e ? e->keys.size() : 0; }

const int* combi_expansion_key(const combi_expansion* e, size_t i, size_t* len) {
  if (e == nullptr || i >= e->keys.size()) {
    if (len) *len = 0;
    return nullptr;
  }
  if (len) *len = e->keys[i].size();
  return e->keys[i].data();
}

int64_t combi_expansion_coeff(const combi_expansion* e, size_t i) {
  return (e && i < e->coeffs.size()) ? e->coeffs[i] : 0;
}

combi_status combi_cycle_type(const int* images, size_t n, combi_partition** out) {
  if (out == nullptr || (images == nullptr && n > 0)) return null_arg();
  return guarded([&] {
    *out = new combi_partition{combi::cycle_type(combi::Permutation(std::vector<int>(images, images + n)))};
  });
}

combi_status combi_mn_coeff(const combi_partition* lambda, const combi_partition* mu, int64_t* out) {
  if (any_null(lambda, mu, out)) return null_arg();
  return guarded([&] { *out = combi::mn_coeff(lambda->value, mu->value); });
}

combi_status combi_char_table_new(int n, combi_char_table** out) {
  if (out == nullptr) return null_arg();
  return guarded([&] {
    auto table = combi::char_table(n);
    auto* t = new combi_char_table;
    for (const auto& l : table.labels) t->labels.push_back(l.parts());
    t->values = std::move(table.values);
    *out = t;
  });
}

void combi_char_table_free(combi_char_table* t) { delete t; }

size_t combi_char_table_dim(const combi_char_table* t) { return t ? t->labels.size() : 0; }

const int* combi_char_table_label(const combi_char_table* t, size_t i, size_t* len) {
  if (t == nullptr || i >= t->labels.size()) {
    if (len) *len = 0;
    return nullptr;
  }
  if (len) *len = t->labels[i].size();
  return t->labels[i].data();
}

int64_t combi_char_table_value(const combi_char_table* t, size_t row, size_t col) {
  if (t == nullptr || row >= t->values.size() || col >= t->values[row].size()) return 0;
  return t->values[row][col];
}

}  // extern "C"
