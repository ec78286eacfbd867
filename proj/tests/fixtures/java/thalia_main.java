package src.toady;

import org.joda.time.chrono.ZonedChronology;
import org.joda.time.Chronology;
import org.joda.time.LocalTime;
import org.joda.time.DateMidnight;

public class Main {
  static public final <K, I extends ZonedChronology, X> void test() throws Exception {
    long elf = (long)-58;
    Chronology pantsuits = new LocalTime(elf).getChronology();
    DateMidnight fitness = DateMidnight.now(pantsuits);
    int liner = fitness.getDayOfYear();
  }
}
