#include "doctest.h"

#include <string>
#include <vector>

#include "combi/combi.h"

namespace {

std::vector<int> at(const combi_seq_list* list, size_t i) {
  size_t len = 0;
  const int* data = combi_seq_list_at(list, i, &len);
  return data ? std::vector<int>(data, data + len) : std::vector<int>{};
}

combi_partition* part(const char* text) {
  combi_partition* p = nullptr;
  REQUIRE(combi_partition_parse(text, &p) == COMBI_OK);
  return p;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(combi_version()) == "1.0.0");
  CHECK(std::string(combi_status_name(COMBI_OK)) == "ok");
  CHECK(std::string(combi_status_name(COMBI_ERR_BOUND_EXCEEDED)) == "bound exceeded");
}

TEST_CASE("partition handles") {
  combi_partition* p = part("5,2,1");
  CHECK(combi_partition_length(p) == 3);
  CHECK(combi_partition_size(p) == 8);
  CHECK(combi_partition_parts(p)[1] == 2);
  combi_partition_free(p);

  combi_partition* bad = reinterpret_cast<combi_partition*>(0x1);
  CHECK(combi_partition_parse("1,2", &bad) == COMBI_ERR_INVALID_ARGUMENT);
  CHECK(bad == reinterpret_cast<combi_partition*>(0x1));  // untouched
  CHECK(std::string(combi_last_error()) == "not weakly decreasing");
  CHECK(combi_partition_parse(nullptr, &bad) == COMBI_ERR_INVALID_ARGUMENT);
  CHECK(combi_partition_parse("1", nullptr) == COMBI_ERR_INVALID_ARGUMENT);

  int parts[] = {3, 3, 0};
  combi_partition* q = nullptr;
  CHECK(combi_partition_from_parts(parts, 3, &q) == COMBI_ERR_INVALID_ARGUMENT);
  CHECK(combi_partition_from_parts(parts, 2, &q) == COMBI_OK);
  CHECK(combi_partition_length(q) == 2);
  combi_partition_free(q);
  combi_partition_free(nullptr);
}

TEST_CASE("partitions_of and counts") {
  combi_seq_list* list = nullptr;
  REQUIRE(combi_partitions_of(5, &list) == COMBI_OK);
  CHECK(combi_seq_list_count(list) == 7);
  CHECK(at(list, 1) == std::vector<int>{4, 1});
  size_t len = 99;
  CHECK(combi_seq_list_at(list, 7, &len) == nullptr);
  combi_seq_list_free(list);
  CHECK(combi_partitions_of(65, &list) == COMBI_ERR_BOUND_EXCEEDED);

  combi_partition* p = part("1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1");
  int64_t v = 0;
  CHECK(combi_count_syt(p, &v) == COMBI_ERR_OVERFLOW);
  CHECK(combi_centralizer_order(p, &v) == COMBI_ERR_OVERFLOW);
  combi_partition_free(p);
  p = part("2,1");
  CHECK(combi_count_syt(p, &v) == COMBI_OK);
  CHECK(v == 2);
  CHECK(combi_centralizer_order(p, &v) == COMBI_OK);
  CHECK(v == 2);
  combi_partition_free(p);
}

TEST_CASE("words") {
  combi_seq_list* list = nullptr;
  REQUIRE(combi_word_parse("0,2,3,1", &list) == COMBI_OK);
  CHECK(combi_seq_list_count(list) == 1);
  CHECK(at(list, 0) == std::vector<int>{0, 2, 3, 1});
  combi_seq_list_free(list);
  CHECK(combi_word_parse("0,x", &list) == COMBI_ERR_INVALID_ARGUMENT);

  int w[] = {2, 1, 0, 0};
  int yes = 0;
  CHECK(combi_is_yamanouchi(w, 4, &yes) == COMBI_OK);
  CHECK(yes == 1);
  CHECK(combi_is_yamanouchi(nullptr, 0, &yes) == COMBI_OK);  // empty word
  CHECK(yes == 1);
  CHECK(combi_is_yamanouchi(nullptr, 2, &yes) == COMBI_ERR_INVALID_ARGUMENT);

  combi_partition* mu = part("2,1");
  REQUIRE(combi_yamanouchi_words(mu, &list) == COMBI_OK);
  CHECK(combi_seq_list_count(list) == 2);
  CHECK(at(list, 0) == std::vector<int>{0, 1, 0});
  combi_seq_list_free(list);
  combi_partition_free(mu);

  int s[] = {1, 0, 1};
  REQUIRE(combi_standardize(s, 3, &list) == COMBI_OK);
  CHECK(at(list, 0) == std::vector<int>{1, 0, 2});
  combi_seq_list_free(list);
}

TEST_CASE("rs round trip through handles") {
  int w[] = {0, 2, 3, 1, 0, 4, 3, 1, 2};
  combi_seq_list* p = nullptr;
  combi_seq_list* q = nullptr;
  REQUIRE(combi_rs(w, 9, &p, &q) == COMBI_OK);
  CHECK(combi_seq_list_count(p) == 3);
  CHECK(at(p, 0) == std::vector<int>{0, 0, 1, 2});
  CHECK(at(q, 2) == std::vector<int>{4, 7});
  combi_seq_list* back = nullptr;
  REQUIRE(combi_rs_inverse(p, q, &back) == COMBI_OK);
  CHECK(at(back, 0) == std::vector<int>(w, w + 9));
  combi_seq_list_free(back);

  // mismatched shapes
  combi_seq_list* bad = combi_seq_list_new();
  int row[] = {0, 1};
  REQUIRE(combi_seq_list_push(bad, row, 2) == COMBI_OK);
  CHECK(combi_rs_inverse(p, bad, &back) == COMBI_ERR_INVALID_ARGUMENT);
  combi_seq_list_free(bad);
  combi_seq_list_free(p);
  combi_seq_list_free(q);

  int g = 0;
  CHECK(combi_greene_row(w, 9, 2, &g) == COMBI_OK);
  CHECK(g == 7);
  CHECK(combi_greene_col(w, 9, 1, &g) == COMBI_OK);
  CHECK(g == 3);
}

TEST_CASE("plactic") {
  int u[] = {1, 2, 0};
  int v[] = {1, 0, 2};
  int same = 0;
  CHECK(combi_plactic_equiv(u, 3, v, 3, &same) == COMBI_OK);
  CHECK(same == 1);
  combi_seq_list* nf = nullptr;
  REQUIRE(combi_plactic_normal_form(u, 3, &nf) == COMBI_OK);
  CHECK(at(nf, 0) == std::vector<int>{1, 0, 2});
  combi_seq_list_free(nf);
}

TEST_CASE("LR and expansions") {
  combi_partition* outer = part("7,5,4,2");
  combi_partition* inner = part("4,3,2,1");
  combi_partition* mu = part("4,3,1");
  int64_t c = 0;
  CHECK(combi_lr_coeff(outer, inner, mu, &c) == COMBI_OK);
  CHECK(c == 4);
  combi_seq_list* words = nullptr;
  REQUIRE(combi_lr_tableaux(outer, inner, mu, &words) == COMBI_OK);
  CHECK(combi_seq_list_count(words) == 4);
  CHECK(at(words, 3) == std::vector<int>{2, 1, 1, 0, 1, 0, 0, 0});
  combi_seq_list_free(words);
  CHECK(combi_lr_coeff(outer, nullptr, mu, &c) == COMBI_ERR_INVALID_ARGUMENT);
  combi_partition_free(outer);
  combi_partition_free(inner);
  combi_partition_free(mu);

  combi_partition* la = part("2,1");
  combi_expansion* e = nullptr;
  REQUIRE(combi_schur_product(la, la, 2, &e) == COMBI_OK);
  CHECK(combi_expansion_degree(e) == 6);
  CHECK(combi_expansion_count(e) == 7);
  size_t len = 0;
  const int* key = combi_expansion_key(e, 3, &len);
  CHECK(std::vector<int>(key, key + len) == std::vector<int>{3, 2, 1});
  CHECK(combi_expansion_coeff(e, 3) == 2);
  CHECK(combi_expansion_key(e, 7, &len) == nullptr);
  combi_expansion_free(e);

  REQUIRE(combi_schur_to_monomial(la, 3, &e) == COMBI_OK);
  CHECK(combi_expansion_count(e) == 2);
  combi_expansion_free(e);

  REQUIRE(combi_pieri(la, 2, 0, &e) == COMBI_OK);
  CHECK(combi_expansion_count(e) == 4);
  combi_expansion_free(e);
  REQUIRE(combi_pieri(la, 1, 1, &e) == COMBI_OK);
  CHECK(combi_expansion_count(e) == 3);
  combi_expansion_free(e);
  CHECK(combi_pieri(la, -1, 0, &e) == COMBI_ERR_INVALID_ARGUMENT);

  combi_partition* shape = part("3,2,1,1");
  combi_partition* content = part("2,2,1,1,1");
  CHECK(combi_kostka(shape, content, &c) == COMBI_OK);
  CHECK(c == 6);
  CHECK(combi_kostka(shape, la, &c) == COMBI_ERR_INVALID_ARGUMENT);
  combi_partition_free(shape);
  combi_partition_free(content);
  combi_partition_free(la);
}

TEST_CASE("characters") {
  int images[] = {1, 2, 0, 4, 3};
  combi_partition* ct = nullptr;
  REQUIRE(combi_cycle_type(images, 5, &ct) == COMBI_OK);
  CHECK(combi_partition_length(ct) == 2);
  combi_partition_free(ct);
  int bad[] = {0, 0};
  CHECK(combi_cycle_type(bad, 2, &ct) == COMBI_ERR_INVALID_ARGUMENT);

  combi_partition* la = part("5,2,1");
  combi_partition* mu = part("3,3,1,1");
  int64_t v = 0;
  CHECK(combi_mn_coeff(la, mu, &v) == COMBI_OK);
  CHECK(v == -2);
  combi_partition_free(la);
  combi_partition_free(mu);

  combi_char_table* t = nullptr;
  REQUIRE(combi_char_table_new(3, &t) == COMBI_OK);
  CHECK(combi_char_table_dim(t) == 3);
  CHECK(combi_char_table_value(t, 1, 0) == -1);
  CHECK(combi_char_table_value(t, 1, 2) == 2);
  size_t len = 0;
  const int* label = combi_char_table_label(t, 1, &len);
  CHECK(std::vector<int>(label, label + len) == std::vector<int>{2, 1});
  combi_char_table_free(t);
  CHECK(combi_char_table_new(13, &t) == COMBI_ERR_BOUND_EXCEEDED);
  CHECK(std::string(combi_last_error()).find("12") != std::string::npos);
}
