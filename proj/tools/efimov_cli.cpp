#include <cstdio>
int main(){ std::puts("efimovlab placeholder"); return 1; }
