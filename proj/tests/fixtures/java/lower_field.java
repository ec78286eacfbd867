class C {
  C c = null;
  void m() {
    int a = 0;
    if (a == 0) {
      return;
    }
  }
}
