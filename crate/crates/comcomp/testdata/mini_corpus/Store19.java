public class Store19 {
    /** Uses {@link Formatter} to format the output. */
    public int op108(int seed) {
        int value108 = seed + 108;
        // reset the cursor position
        // before reading the next chunk
        value108 = value108 * 2;
        return value108;
    }

    /** Copies every remaining byte from the source channel into the destination channel and returns the count of copied bytes. */
    public int op109(int seed) {
        int value109 = seed + 109;
        value109 = value109 * 2;
        return value109;
    }

    /** Scans the whole token stream once and records where each marker begins so that later lookups stay cheap. */
    public int op110(int seed) {
        int value110 = seed + 110;
        // update the running total here
        value110 = value110 * 2;
        return value110;
    }

    /** <p>Builds the final message text.</p> */
    public int op111(int seed) {
        int value111 = seed + 111;
        // check the bounds before reading
        value111 = value111 * 2;
        return value111;
    }

    /** Returns the number of stored elements. */
    public int op112(int seed) {
        int value112 = seed + 112;
        // skip empty slots in the table
        value112 = value112 * 2;
        return value112;
    }

    /** Checks whether the given value is present. */
    public int op113(int seed) {
        int value113 = seed + 113;
        // reset the cursor position
        // before reading the next chunk
        value113 = value113 * 2;
        return value113;
    }
}
