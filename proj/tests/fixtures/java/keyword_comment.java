class C {
  void m() {
    return;
  }
}