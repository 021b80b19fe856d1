#include <cstdio>
int main() { std::puts("ore: under construction"); return 0; }
